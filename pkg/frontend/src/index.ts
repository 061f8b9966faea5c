export { aggregate, axisValues, transferOrder } from "./aggregate.js";
export type { GridStats } from "./aggregate.js";
export {
  barsMOption,
  FIGURE_KINDS,
  heatmapOption,
  lineVOption,
  surfaceOption,
  taylorErrorOption,
} from "./figures.js";
export type { FigureKind, FigureOption } from "./figures.js";
export { buildOption, renderSvg } from "./render.js";
export type { RenderRequest } from "./render.js";
export {
  MissingMetricError,
  parseResultsCsv,
  parseTaylorErrorCsv,
  RESULT_COLUMNS,
  SchemaMismatchError,
} from "./schema.js";
export type { ResultRow, TaylorErrorRow } from "./schema.js";
