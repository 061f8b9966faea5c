import { MissingMetricError, ResultRow } from "./schema.js";

/** Seed-aggregated statistics for one (lambda, v, transfer) grid cell. */
export interface GridStats {
  lambda: number;
  v: number;
  transfer: string;
  mean: number;
  std: number;
  n: number;
}

const POINT_SEED = /^\d+$/;

function sampleStd(values: number[], mean: number): number {
  if (values.length < 2) return NaN;
  const ss = values.reduce((acc, x) => acc + (x - mean) * (x - mean), 0);
  return Math.sqrt(ss / (values.length - 1));
}

/**
 * Mean and sample standard deviation over seeds, re-derived from point rows
 * (summary rows in the file are ignored so plots stay correct without them).
 * FAIL rows are skipped.
 */
export function aggregate(rows: ResultRow[], metric: string): GridStats[] {
  const metrics = new Set(rows.map((r) => r.metric));
  if (!metrics.has(metric)) {
    throw new MissingMetricError(
      `metric ${JSON.stringify(metric)} not in CSV (has: ${[...metrics].sort().join(", ")})`,
    );
  }
  const cells = new Map<string, { lambda: number; v: number; transfer: string; values: number[] }>();
  for (const row of rows) {
    if (row.metric !== metric || !POINT_SEED.test(row.seed)) continue;
    if (row.value === null || !Number.isFinite(row.value)) continue;
    const key = `${row.lambda}|${row.v}|${row.transfer}`;
    let cell = cells.get(key);
    if (!cell) {
      cell = { lambda: row.lambda, v: row.v, transfer: row.transfer, values: [] };
      cells.set(key, cell);
    }
    cell.values.push(row.value);
  }
  const stats: GridStats[] = [];
  for (const cell of cells.values()) {
    if (cell.values.length === 0) continue;
    const mean = cell.values.reduce((a, b) => a + b, 0) / cell.values.length;
    stats.push({
      lambda: cell.lambda,
      v: cell.v,
      transfer: cell.transfer,
      mean,
      std: sampleStd(cell.values, mean),
      n: cell.values.length,
    });
  }
  return stats;
}

/** Sorted distinct values of one axis. */
export function axisValues(stats: GridStats[], key: "v" | "lambda"): number[] {
  return [...new Set(stats.map((s) => s[key]))].sort((a, b) => a - b);
}

/** Transfer tokens in canonical order: series orders ascending, then tanh. */
export function transferOrder(stats: GridStats[]): string[] {
  const tokens = [...new Set(stats.map((s) => s.transfer))];
  const rank = (t: string): number =>
    t === "tanh" ? Number.MAX_SAFE_INTEGER : Number(t.split(":")[1] ?? NaN);
  return tokens.sort((a, b) => rank(a) - rank(b));
}
