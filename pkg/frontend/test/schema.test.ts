import { describe, expect, it } from "vitest";

import {
  parseResultsCsv,
  parseTaylorErrorCsv,
  SchemaMismatchError,
} from "../src/schema.js";

const HEADER = "task,topology,N,lambda,v,transfer,seed,metric,value,max_abs_state";

function row(seed: string, value: string, v = "0.1", transfer = "tanh"): string {
  return `memory,scr,50,0.9,${v},${transfer},${seed},memory_capacity_total,${value},0.5`;
}

describe("parseResultsCsv", () => {
  it("parses point, summary, and FAIL rows", () => {
    const rows = parseResultsCsv(
      [HEADER, row("0", "48.5"), row("1", "FAIL"), row("mean", "48.5")].join("\n"),
    );
    expect(rows).toHaveLength(3);
    expect(rows[0]).toMatchObject({ task: "memory", N: 50, v: 0.1, value: 48.5 });
    expect(rows[1].value).toBeNull();
    expect(rows[2].seed).toBe("mean");
  });

  it("round-trips 17-digit reals exactly", () => {
    const rows = parseResultsCsv(
      [HEADER, row("0", "48.700000000000003", "1.0000000000000001e-05")].join("\n"),
    );
    expect(rows[0].value).toBe(48.700000000000003);
    expect(rows[0].v).toBe(1.0000000000000001e-5);
  });

  it("rejects a wrong header", () => {
    expect(() => parseResultsCsv("a,b,c\n1,2,3")).toThrow(SchemaMismatchError);
  });

  it("rejects a header-only file", () => {
    expect(() => parseResultsCsv(HEADER)).toThrow(SchemaMismatchError);
  });

  it("rejects non-numeric values", () => {
    expect(() => parseResultsCsv([HEADER, row("0", "oops")].join("\n"))).toThrow(
      SchemaMismatchError,
    );
  });

  it("accepts nan in summary rows", () => {
    const rows = parseResultsCsv([HEADER, row("mean", "nan")].join("\n"));
    expect(rows[0].value).toBeNaN();
  });
});

describe("parseTaylorErrorCsv", () => {
  it("parses the m,rmse table", () => {
    const rows = parseTaylorErrorCsv("m,rmse\n1,0.0968\n2,0.0301");
    expect(rows).toEqual([
      { m: 1, rmse: 0.0968 },
      { m: 2, rmse: 0.0301 },
    ]);
  });

  it("rejects other shapes", () => {
    expect(() => parseTaylorErrorCsv(HEADER + "\n" + row("0", "1"))).toThrow(
      SchemaMismatchError,
    );
  });
});
