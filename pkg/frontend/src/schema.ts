import Papa from "papaparse";

export const RESULT_COLUMNS = [
  "task",
  "topology",
  "N",
  "lambda",
  "v",
  "transfer",
  "seed",
  "metric",
  "value",
  "max_abs_state",
] as const;

export const FAIL_SENTINEL = "FAIL";

/** One row of an esn-bench results CSV. `value` is null for FAIL rows. */
export interface ResultRow {
  task: string;
  topology: string;
  N: number;
  lambda: number;
  v: number;
  transfer: string;
  seed: string;
  metric: string;
  value: number | null;
  maxAbsState: number;
}

export interface TaylorErrorRow {
  m: number;
  rmse: number;
}

export class SchemaMismatchError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "SchemaMismatchError";
  }
}

export class MissingMetricError extends Error {
  constructor(message: string) {
    super(message);
    this.name = "MissingMetricError";
  }
}

function parseFinite(field: string, raw: string): number {
  const value = Number(raw);
  if (raw === "" || !Number.isFinite(value)) {
    throw new SchemaMismatchError(`bad numeric field ${field}: ${JSON.stringify(raw)}`);
  }
  return value;
}

// summary rows over zero surviving seeds carry "nan"
function parseMaybeNan(field: string, raw: string): number {
  if (raw === "nan" || raw === "-nan") return NaN;
  return parseFinite(field, raw);
}

/** Parse a sweep results CSV, enforcing the exact column set. */
export function parseResultsCsv(text: string): ResultRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  if (parsed.errors.length > 0) {
    throw new SchemaMismatchError(`CSV parse error: ${parsed.errors[0].message}`);
  }
  const fields = parsed.meta.fields ?? [];
  if (fields.join(",") !== RESULT_COLUMNS.join(",")) {
    throw new SchemaMismatchError(
      `expected columns ${RESULT_COLUMNS.join(",")}, got ${fields.join(",")}`,
    );
  }
  if (parsed.data.length === 0) {
    throw new SchemaMismatchError("results CSV has a header but no rows");
  }
  return parsed.data.map((row) => ({
    task: row.task,
    topology: row.topology,
    N: parseFinite("N", row.N),
    lambda: parseFinite("lambda", row.lambda),
    v: parseFinite("v", row.v),
    transfer: row.transfer,
    seed: row.seed,
    metric: row.metric,
    value: row.value === FAIL_SENTINEL ? null : parseMaybeNan("value", row.value),
    maxAbsState: parseMaybeNan("max_abs_state", row.max_abs_state),
  }));
}

/** Parse the `esn-bench taylor-error` output (columns m,rmse). */
export function parseTaylorErrorCsv(text: string): TaylorErrorRow[] {
  const parsed = Papa.parse<Record<string, string>>(text.trim(), {
    header: true,
    skipEmptyLines: true,
  });
  const fields = parsed.meta.fields ?? [];
  if (fields.join(",") !== "m,rmse") {
    throw new SchemaMismatchError(`expected columns m,rmse, got ${fields.join(",")}`);
  }
  if (parsed.data.length === 0) {
    throw new SchemaMismatchError("approximation-error CSV has no rows");
  }
  return parsed.data.map((row) => ({
    m: parseFinite("m", row.m),
    rmse: parseFinite("rmse", row.rmse),
  }));
}
