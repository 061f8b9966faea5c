import { describe, expect, it } from "vitest";

import {
  barsMOption,
  heatmapOption,
  lineVOption,
  surfaceOption,
  taylorErrorOption,
} from "../src/figures.js";
import { renderSvg } from "../src/render.js";
import { ResultRow, SchemaMismatchError } from "../src/schema.js";

function grid(vs: number[], transfers: string[], lambdas = [0.9]): ResultRow[] {
  const rows: ResultRow[] = [];
  for (const lambda of lambdas) {
    for (const v of vs) {
      for (const transfer of transfers) {
        for (const seed of ["0", "1"]) {
          rows.push({
            task: "memory",
            topology: "scr",
            N: 50,
            lambda,
            v,
            transfer,
            seed,
            metric: "memory_capacity_total",
            value: 40 + v + transfers.indexOf(transfer) + Number(seed),
            maxAbsState: 0.5,
          });
        }
      }
    }
  }
  return rows;
}

describe("surfaceOption", () => {
  it("builds a full (v, transfer) cell grid", () => {
    const opt = surfaceOption(grid([0.01, 0.1, 0.2], ["taylor:1", "tanh"]), "memory_capacity_total") as any;
    expect(opt.series[0].type).toBe("heatmap");
    expect(opt.series[0].data).toHaveLength(6);
    expect(opt.yAxis.data).toEqual(["taylor:1", "tanh"]);
  });

  it("rejects a degenerate grid", () => {
    expect(() => surfaceOption(grid([0.1], ["taylor:1", "tanh"]), "memory_capacity_total")).toThrow(
      SchemaMismatchError,
    );
  });
});

describe("lineVOption", () => {
  it("plots tanh means on a log v axis", () => {
    const opt = lineVOption(grid([0.001, 0.01, 0.1], ["tanh"]), "memory_capacity_total") as any;
    expect(opt.xAxis.type).toBe("log");
    expect(opt.series[0].data.map((d: number[]) => d[0])).toEqual([0.001, 0.01, 0.1]);
  });

  it("rejects when the transfer is absent", () => {
    expect(() => lineVOption(grid([0.01, 0.1], ["taylor:1"]), "memory_capacity_total")).toThrow(
      SchemaMismatchError,
    );
  });
});

describe("barsMOption", () => {
  it("draws one bar per transfer with whisker data", () => {
    const opt = barsMOption(
      grid([0.1], ["taylor:1", "taylor:2", "tanh"]),
      "memory_capacity_total",
    ) as any;
    expect(opt.series[0].data).toHaveLength(3);
    expect(opt.series[1].type).toBe("custom");
    const [idx, lo, hi] = opt.series[1].data[0];
    expect(idx).toBe(0);
    expect(hi).toBeGreaterThan(lo);
  });

  it("rejects when the v slice is missing", () => {
    expect(() =>
      barsMOption(grid([0.2], ["taylor:1", "tanh"]), "memory_capacity_total", 0.1),
    ).toThrow(SchemaMismatchError);
  });
});

describe("heatmapOption", () => {
  it("builds the (v, lambda) grid for one transfer", () => {
    const rows = grid([0.1, 0.5, 1.0], ["taylor:1", "tanh"], [0.1, 0.5, 1.0]);
    const opt = heatmapOption(rows, "memory_capacity_total") as any;
    expect(opt.series[0].data).toHaveLength(9);
  });

  it("rejects sweep-shaped data with a single lambda", () => {
    expect(() =>
      heatmapOption(grid([0.1, 0.2], ["tanh"]), "memory_capacity_total"),
    ).toThrow(SchemaMismatchError);
  });
});

describe("taylorErrorOption", () => {
  it("carries the curve on both the main and log inset axes", () => {
    const opt = taylorErrorOption([
      { m: 2, rmse: 0.03 },
      { m: 1, rmse: 0.0968 },
    ]) as any;
    expect(opt.series).toHaveLength(2);
    expect(opt.yAxis[1].type).toBe("log");
    expect(opt.series[0].data[0]).toEqual([1, 0.0968]); // sorted by order
  });
});

describe("renderSvg determinism", () => {
  it("same request renders identical SVG bytes", () => {
    const csvText = [
      "task,topology,N,lambda,v,transfer,seed,metric,value,max_abs_state",
      "memory,scr,50,0.9,0.01,taylor:1,0,memory_capacity_total,48.1,0.4",
      "memory,scr,50,0.9,0.01,tanh,0,memory_capacity_total,48.2,0.4",
      "memory,scr,50,0.9,0.1,taylor:1,0,memory_capacity_total,48.0,0.4",
      "memory,scr,50,0.9,0.1,tanh,0,memory_capacity_total,42.3,0.4",
    ].join("\n");
    const req = { csvText, kind: "surface" as const, metric: "memory_capacity_total" };
    const a = renderSvg(req);
    const b = renderSvg(req);
    expect(a).toContain("<svg");
    expect(a).toBe(b);
  });
});
