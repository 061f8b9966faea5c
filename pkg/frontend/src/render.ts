import { BarChart, CustomChart, HeatmapChart, LineChart } from "echarts/charts";
import { GridComponent, TitleComponent, VisualMapComponent } from "echarts/components";
import * as echarts from "echarts/core";
import { SVGRenderer } from "echarts/renderers";

import {
  barsMOption,
  FigureKind,
  FigureOption,
  heatmapOption,
  lineVOption,
  surfaceOption,
  taylorErrorOption,
} from "./figures.js";
import { parseResultsCsv, parseTaylorErrorCsv } from "./schema.js";

echarts.use([
  BarChart,
  CustomChart,
  HeatmapChart,
  LineChart,
  GridComponent,
  TitleComponent,
  VisualMapComponent,
  SVGRenderer,
]);

export interface RenderRequest {
  csvText: string;
  kind: FigureKind;
  metric: string;
  transfer?: string;
  v?: number;
  width?: number;
  height?: number;
}

export function buildOption(req: RenderRequest): FigureOption {
  if (req.kind === "taylor_error") {
    return taylorErrorOption(parseTaylorErrorCsv(req.csvText));
  }
  const rows = parseResultsCsv(req.csvText);
  switch (req.kind) {
    case "surface":
      return surfaceOption(rows, req.metric);
    case "line_v":
      return lineVOption(rows, req.metric, req.transfer);
    case "bars_m":
      return barsMOption(rows, req.metric, req.v);
    case "heatmap":
      return heatmapOption(rows, req.metric, req.transfer);
  }
}

/**
 * The SVG renderer mints element ids and class names from process-wide
 * counters, so two renders of the same figure differ in identifier numbering
 * only.  Renumber every renderer-scoped identifier by first appearance to
 * make equal requests yield equal bytes.
 */
export function normalizeSvgIds(svg: string): string {
  const seen = new Map<string, string>();
  return svg.replace(/zr\d+-([a-z]+)-?(\d+)/g, (token, stem: string) => {
    let next = seen.get(token);
    if (next === undefined) {
      next = `zr-${stem}-${seen.size}`;
      seen.set(token, next);
    }
    return next;
  });
}

/** Render a figure to an SVG string (server-side, no DOM). */
export function renderSvg(req: RenderRequest): string {
  const option = buildOption(req);
  const chart = echarts.init(null, null, {
    renderer: "svg",
    ssr: true,
    width: req.width ?? 800,
    height: req.height ?? 600,
  });
  try {
    chart.setOption(option);
    return normalizeSvgIds(chart.renderToSVGString());
  } finally {
    chart.dispose();
  }
}
