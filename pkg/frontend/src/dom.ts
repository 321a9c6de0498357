/**
 * Thin DOM layer: renders the view model into a 9x9 board, a
 * decomposition list and the 6x6 thumbnail matrix, and wires clicks
 * back into the store. Everything testable lives in the other modules.
 */

import { ApiClient } from "./api.js";
import { decodeFragment, encodeFragment } from "./fragment.js";
import { pointAt, SIDE } from "./grid.js";
import { BoardStore } from "./state.js";
import {
  buildCells,
  decompositionRows,
  grid36Thumbnails,
  statusBanner,
} from "./viewmodel.js";

export function mount(root: HTMLElement, serviceUrl: string): BoardStore {
  const api = new ApiClient(serviceUrl);
  const store = new BoardStore(api);

  root.innerHTML = `
    <div class="banner"></div>
    <div class="toolbar">
      <button data-action="decompose">decompositions</button>
      <button data-action="grid36">grid of 36</button>
      <button data-action="partition">build partition</button>
      <button data-action="clear">clear</button>
    </div>
    <table class="board"></table>
    <ol class="decompositions"></ol>
    <div class="thumbnails"></div>
  `;
  const banner = root.querySelector(".banner") as HTMLElement;
  const board = root.querySelector(".board") as HTMLTableElement;
  const list = root.querySelector(".decompositions") as HTMLOListElement;
  const thumbs = root.querySelector(".thumbnails") as HTMLElement;

  for (let r = 0; r < SIDE; r++) {
    const tr = board.insertRow();
    for (let c = 0; c < SIDE; c++) {
      const td = tr.insertCell();
      td.dataset.point = String(pointAt(r, c));
      td.addEventListener("click", () => store.togglePoint(pointAt(r, c)));
    }
  }

  root.querySelectorAll<HTMLButtonElement>(".toolbar button").forEach((btn) => {
    btn.addEventListener("click", () => {
      const action = btn.dataset.action;
      const fail = (err: unknown) => {
        banner.textContent = err instanceof Error ? err.message : String(err);
      };
      if (action === "decompose") {
        store.loadDecompositions().catch(fail);
      } else if (action === "grid36") {
        store.loadGrid36().catch(fail);
      } else if (action === "partition") {
        store.buildPartition().catch(fail);
      } else if (action === "clear") {
        store.setSelection(new Set());
      }
    });
  });

  store.subscribe((state) => {
    window.location.hash = encodeFragment(state.selected);
    banner.textContent = statusBanner(state);

    for (const cell of buildCells(state)) {
      const td = board.rows[cell.row].cells[cell.col];
      td.textContent = cell.member ? "#" : cell.anchorBadge ? "A" : cell.label;
      td.className = [
        cell.member ? "member" : "",
        cell.violation ? "violation" : "",
        cell.anchorBadge ? "anchor" : "",
      ]
        .filter(Boolean)
        .join(" ");
      td.style.background = cell.color ?? "";
    }

    list.innerHTML = "";
    for (const row of decompositionRows(state)) {
      const li = document.createElement("li");
      li.textContent = `${row.halfA.join(" ")} | ${row.halfB.join(" ")}`;
      if (row.active) {
        li.classList.add("active");
      }
      li.addEventListener("click", () => store.selectDecomposition(row.index));
      list.appendChild(li);
    }

    thumbs.innerHTML = "";
    for (const thumb of grid36Thumbnails(state)) {
      const div = document.createElement("div");
      div.className = "thumb";
      div.textContent = `R${thumb.row + 1} ∪ C${thumb.col + 1}`;
      div.addEventListener("click", () =>
        store.setSelection(new Set(thumb.points)),
      );
      thumbs.appendChild(div);
    }
  });

  store.setSelection(decodeFragment(window.location.hash));
  return store;
}
