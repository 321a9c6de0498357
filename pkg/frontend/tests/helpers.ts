import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { FetchLike } from "../src/api.js";
import { Scheduler } from "../src/state.js";

const fixtureDir = join(dirname(fileURLToPath(import.meta.url)), "fixtures");

export function fixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(fixtureDir, `${name}.json`), "utf8"));
}

export interface RecordedRequest {
  path: string;
  body: unknown;
}

/**
 * Fetch stand-in that answers from committed service fixtures, so the
 * assertions run against real intercepted responses. Unknown analyze
 * bodies fall back to a minimal empty-board answer.
 */
export class FakeService {
  requests: RecordedRequest[] = [];
  failNext = false;

  readonly fetch: FetchLike = async (url, init) => {
    const path = new URL(url, "http://service").pathname;
    const body = JSON.parse(String(init.body));
    this.requests.push({ path, body });
    if (this.failNext) {
      this.failNext = false;
      throw new TypeError("network down");
    }
    const payload = this.lookup(path, body);
    if (payload === undefined) {
      return new Response(JSON.stringify({ detail: "unexpected request" }), {
        status: 422,
      });
    }
    return new Response(JSON.stringify(payload), { status: 200 });
  };

  private lookup(path: string, body: any): unknown {
    const same = (a: number[], b: number[]) => {
      const xs = [...a].sort((x, y) => x - y);
      const ys = [...b].sort((x, y) => x - y);
      return xs.length === ys.length && xs.every((v, i) => v === ys[i]);
    };
    if (path === "/analyze") {
      const names = ["analyze_c0", "analyze_demicap", "analyze_line", "analyze_pair"];
      for (const name of names) {
        const fix = fixture<{ points: number[] }>(name);
        if (same(fix.points, body.points)) {
          return fix;
        }
      }
      return emptyAnalysis(body.points);
    }
    if (path === "/decompositions") {
      return fixture("decompositions_c0");
    }
    if (path === "/partition") {
      return fixture("partition_c0");
    }
    if (path === "/grid36") {
      return fixture("grid36_c0");
    }
    return undefined;
  }
}

function emptyAnalysis(points: number[]) {
  return {
    points: [...points].sort((a, b) => a - b),
    is_cap: true,
    is_complete: false,
    is_maximal_cap: false,
    anchor: null,
    is_demicap: false,
    demicap_anchor: null,
    completion_counts: {},
    violations: [],
  };
}

/** Scheduler whose timers only fire when the test flushes them. */
export class ManualScheduler {
  private pending: Array<(() => void) | null> = [];

  readonly schedule: Scheduler = (fn) => {
    const index = this.pending.push(fn) - 1;
    return () => {
      this.pending[index] = null;
    };
  };

  async flush(): Promise<void> {
    const fns = this.pending.splice(0);
    for (const fn of fns) {
      if (fn) {
        fn();
      }
    }
    // let the fetch promises settle
    await new Promise((resolve) => setTimeout(resolve, 0));
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
