import { beforeEach, describe, expect, it } from "vitest";

import { ApiClient } from "../src/api.js";
import { BoardStore } from "../src/state.js";
import { FakeService, fixture, ManualScheduler } from "./helpers.js";

const C0: number[] = fixture<{ points: number[] }>("analyze_c0").points;

let service: FakeService;
let scheduler: ManualScheduler;
let store: BoardStore;

beforeEach(() => {
  service = new FakeService();
  scheduler = new ManualScheduler();
  store = new BoardStore(
    new ApiClient("http://service", service.fetch),
    scheduler.schedule,
  );
});

async function loadC0(): Promise<void> {
  store.setSelection(new Set(C0));
  await scheduler.flush();
}

describe("board store", () => {
  it("toggles membership and marks the analysis stale until it lands", async () => {
    store.togglePoint(0);
    expect(store.state.selected.has(0)).toBe(true);
    expect(store.state.stale).toBe(true);
    await scheduler.flush();
    expect(store.state.stale).toBe(false);
    expect(store.state.analysis?.points).toEqual([0]);
    store.togglePoint(0);
    expect(store.state.selected.has(0)).toBe(false);
  });

  it("debounces rapid clicks into one analyze request", async () => {
    for (const p of [0, 1, 3]) {
      store.togglePoint(p);
    }
    await scheduler.flush();
    const analyzeCalls = service.requests.filter((r) => r.path === "/analyze");
    expect(analyzeCalls.length).toBe(1);
    expect((analyzeCalls[0].body as { points: number[] }).points).toEqual([
      0, 1, 3,
    ]);
  });

  it("lets the latest request win", async () => {
    store.setSelection(new Set([0, 1]));
    await scheduler.flush();
    store.setSelection(new Set(C0));
    await scheduler.flush();
    expect(store.state.analysis?.anchor).toBe(0);
    expect(store.state.analysis?.points).toEqual(C0);
  });

  it("keeps the stale board and reports the error when the service dies", async () => {
    service.failNext = true;
    store.setSelection(new Set([0, 1]));
    await scheduler.flush();
    expect(store.state.stale).toBe(true);
    expect(store.state.error).toContain("network down");
    // next click recovers
    store.togglePoint(3);
    await scheduler.flush();
    expect(store.state.error).toBeNull();
    expect(store.state.stale).toBe(false);
  });

  it("gates exploration on the selection being a maximal cap", async () => {
    store.setSelection(new Set([0, 1]));
    await scheduler.flush();
    expect(store.canExplore()).toBe(false);
    await expect(store.loadDecompositions()).rejects.toThrow(
      "select a maximal cap",
    );
    await loadC0();
    expect(store.canExplore()).toBe(true);
  });

  it("lists the 36 decompositions of the loaded cap", async () => {
    await loadC0();
    await store.loadDecompositions();
    expect(store.state.mode).toBe("decompose");
    expect(store.state.decompositions?.pairs.length).toBe(36);
  });

  it("builds the partition from the chosen decomposition", async () => {
    await loadC0();
    await store.loadDecompositions();
    await expect(store.buildPartition()).rejects.toThrow(
      "choose a decomposition",
    );
    store.selectDecomposition(0);
    await store.buildPartition();
    expect(store.state.mode).toBe("partition");
    expect(store.state.partition?.blocks.length).toBe(4);
  });

  it("loads the 6x6 grid", async () => {
    await loadC0();
    await store.loadGrid36();
    expect(store.state.grid?.caps.length).toBe(6);
    expect(store.state.grid?.caps.every((line) => line.length === 6)).toBe(
      true,
    );
  });

  it("drops derived views when the selection changes", async () => {
    await loadC0();
    await store.loadDecompositions();
    store.togglePoint(0);
    expect(store.state.decompositions).toBeNull();
    expect(store.state.partition).toBeNull();
    expect(store.state.grid).toBeNull();
  });
});
