import { describe, expect, it } from "vitest";

import { aggregate, axisValues, transferOrder } from "../src/aggregate.js";
import { MissingMetricError, ResultRow } from "../src/schema.js";

function point(seed: string, value: number | null, v = 0.1, transfer = "tanh"): ResultRow {
  return {
    task: "memory",
    topology: "scr",
    N: 50,
    lambda: 0.9,
    v,
    transfer,
    seed,
    metric: "memory_capacity_total",
    value,
    maxAbsState: 0.4,
  };
}

describe("aggregate", () => {
  it("computes mean and sample std over seeds", () => {
    const stats = aggregate(
      [point("0", 10), point("1", 12), point("2", 14)],
      "memory_capacity_total",
    );
    expect(stats).toHaveLength(1);
    expect(stats[0].mean).toBe(12);
    expect(stats[0].std).toBeCloseTo(2, 12);
    expect(stats[0].n).toBe(3);
  });

  it("ignores summary rows and FAIL points", () => {
    const rows = [
      point("0", 10),
      point("1", null),
      { ...point("mean", 999), seed: "mean" },
      { ...point("std", 999), seed: "std" },
    ];
    const stats = aggregate(rows, "memory_capacity_total");
    expect(stats[0].n).toBe(1);
    expect(stats[0].mean).toBe(10);
  });

  it("separates grid cells by v, lambda, and transfer", () => {
    const rows = [
      point("0", 1, 0.1, "taylor:1"),
      point("0", 2, 0.1, "tanh"),
      point("0", 3, 0.2, "tanh"),
      { ...point("0", 4, 0.2, "tanh"), lambda: 0.5 },
    ];
    expect(aggregate(rows, "memory_capacity_total")).toHaveLength(4);
  });

  it("raises for a metric the CSV does not carry", () => {
    expect(() => aggregate([point("0", 1)], "nmse")).toThrow(MissingMetricError);
  });
});

describe("axis helpers", () => {
  it("sorts axis values", () => {
    const stats = aggregate(
      [point("0", 1, 0.3), point("0", 1, 0.001), point("0", 1, 0.1)],
      "memory_capacity_total",
    );
    expect(axisValues(stats, "v")).toEqual([0.001, 0.1, 0.3]);
  });

  it("orders transfers as ascending series orders then tanh", () => {
    const stats = aggregate(
      [
        point("0", 1, 0.1, "tanh"),
        point("0", 1, 0.1, "taylor:10"),
        point("0", 1, 0.1, "taylor:2"),
        point("0", 1, 0.1, "taylor:1"),
      ],
      "memory_capacity_total",
    );
    expect(transferOrder(stats)).toEqual(["taylor:1", "taylor:2", "taylor:10", "tanh"]);
  });
});
