import type {
  BarSeriesOption,
  CustomSeriesOption,
  HeatmapSeriesOption,
  LineSeriesOption,
} from "echarts/charts";
import type {
  GridComponentOption,
  TitleComponentOption,
  VisualMapComponentOption,
} from "echarts/components";
import type { ComposeOption } from "echarts/core";

import { aggregate, axisValues, transferOrder } from "./aggregate.js";
import { ResultRow, SchemaMismatchError, TaylorErrorRow } from "./schema.js";

export type FigureOption = ComposeOption<
  | BarSeriesOption
  | CustomSeriesOption
  | HeatmapSeriesOption
  | LineSeriesOption
  | GridComponentOption
  | TitleComponentOption
  | VisualMapComponentOption
>;

export const FIGURE_KINDS = ["surface", "line_v", "bars_m", "heatmap", "taylor_error"] as const;
export type FigureKind = (typeof FIGURE_KINDS)[number];

const BASE: FigureOption = {
  animation: false,
  backgroundColor: "#ffffff",
};

function fmtV(v: number): string {
  return v < 0.01 ? v.toExponential(2) : String(Number(v.toPrecision(4)));
}

function heat(
  xLabels: string[],
  yLabels: string[],
  cells: [number, number, number][],
  titles: { title: string; xName: string; yName: string },
): FigureOption {
  const values = cells.map((c) => c[2]);
  return {
    ...BASE,
    title: { text: titles.title, left: "center" },
    grid: { left: 90, right: 110, top: 60, bottom: 70 },
    xAxis: { type: "category", data: xLabels, name: titles.xName, nameLocation: "middle", nameGap: 30 },
    yAxis: { type: "category", data: yLabels, name: titles.yName, nameLocation: "middle", nameGap: 60 },
    visualMap: {
      min: Math.min(...values),
      max: Math.max(...values),
      calculable: true,
      orient: "vertical",
      right: 10,
      top: "center",
      inRange: { color: ["#313695", "#74add1", "#ffffbf", "#f46d43", "#a50026"] },
    },
    series: [{ type: "heatmap", data: cells, label: { show: cells.length <= 60 } }],
  };
}

/** Seed-mean metric over the (v, transfer-order) grid, drawn as a shaded map. */
export function surfaceOption(rows: ResultRow[], metric: string): FigureOption {
  const stats = aggregate(rows, metric);
  const vs = axisValues(stats, "v");
  const transfers = transferOrder(stats);
  if (vs.length < 2 || transfers.length < 2) {
    throw new SchemaMismatchError(
      `surface needs a 2-d (v, transfer) grid, got ${vs.length} x ${transfers.length}`,
    );
  }
  const byKey = new Map(stats.map((s) => [`${s.v}|${s.transfer}`, s.mean]));
  const cells: [number, number, number][] = [];
  for (let i = 0; i < vs.length; i++) {
    for (let j = 0; j < transfers.length; j++) {
      const mean = byKey.get(`${vs[i]}|${transfers[j]}`);
      if (mean !== undefined) cells.push([i, j, mean]);
    }
  }
  return heat(vs.map(fmtV), transfers, cells, {
    title: metric,
    xName: "input weight coefficient v",
    yName: "transfer",
  });
}

/** Seed-mean metric against v on a logarithmic v axis, for one transfer. */
export function lineVOption(rows: ResultRow[], metric: string, transfer = "tanh"): FigureOption {
  const stats = aggregate(rows, metric).filter((s) => s.transfer === transfer);
  if (stats.length === 0) {
    throw new SchemaMismatchError(`no rows for transfer ${JSON.stringify(transfer)}`);
  }
  const vs = axisValues(stats, "v");
  if (vs.length < 2) {
    throw new SchemaMismatchError(`line over v needs >= 2 v values, got ${vs.length}`);
  }
  const byV = new Map(stats.map((s) => [s.v, s.mean]));
  const data = vs.map((v) => [v, byV.get(v)] as [number, number]);
  return {
    ...BASE,
    title: { text: `${metric} (${transfer})`, left: "center" },
    grid: { left: 90, right: 40, top: 60, bottom: 70 },
    xAxis: {
      type: "log",
      name: "input weight coefficient v",
      nameLocation: "middle",
      nameGap: 30,
    },
    yAxis: { type: "value", name: metric, nameLocation: "middle", nameGap: 60 },
    series: [{ type: "line", data, symbol: "circle", symbolSize: 6 }],
  };
}

/** Seed means as bars with +/- one standard deviation whiskers, at one v. */
export function barsMOption(rows: ResultRow[], metric: string, v = 0.1): FigureOption {
  const stats = aggregate(rows, metric);
  const atV = stats.filter((s) => Math.abs(s.v - v) <= 1e-12 * Math.max(1, Math.abs(v)));
  if (atV.length === 0) {
    const have = axisValues(stats, "v").map(fmtV).join(", ");
    throw new SchemaMismatchError(`no rows at v=${v} (grid has: ${have})`);
  }
  const transfers = transferOrder(atV);
  const byTransfer = new Map(atV.map((s) => [s.transfer, s]));
  const means = transfers.map((t) => byTransfer.get(t)!.mean);
  const whiskers = transfers.map((t, i) => {
    const s = byTransfer.get(t)!;
    const std = Number.isFinite(s.std) ? s.std : 0;
    return [i, s.mean - std, s.mean + std] as [number, number, number];
  });
  return {
    ...BASE,
    title: { text: `${metric} at v=${fmtV(v)} (mean ± std over seeds)`, left: "center" },
    grid: { left: 90, right: 40, top: 60, bottom: 70 },
    xAxis: { type: "category", data: transfers, name: "transfer", nameLocation: "middle", nameGap: 30 },
    yAxis: { type: "value", name: metric, nameLocation: "middle", nameGap: 60 },
    series: [
      { type: "bar", data: means, barWidth: "55%", itemStyle: { color: "#74add1" } },
      {
        type: "custom",
        z: 10,
        renderItem: (_params: unknown, api: any) => {
          const x = api.value(0) as number;
          const lo = api.coord([x, api.value(1)]);
          const hi = api.coord([x, api.value(2)]);
          const w = 6;
          const style = { stroke: "#333", fill: undefined as unknown as string, lineWidth: 1.5 };
          return {
            type: "group",
            children: [
              { type: "line", shape: { x1: lo[0], y1: lo[1], x2: hi[0], y2: hi[1] }, style },
              { type: "line", shape: { x1: lo[0] - w, y1: lo[1], x2: lo[0] + w, y2: lo[1] }, style },
              { type: "line", shape: { x1: hi[0] - w, y1: hi[1], x2: hi[0] + w, y2: hi[1] }, style },
            ],
          };
        },
        data: whiskers,
      },
    ],
  };
}

/** Seed-mean metric over the (v, lambda) sensitivity grid for one transfer. */
export function heatmapOption(rows: ResultRow[], metric: string, transfer = "tanh"): FigureOption {
  const stats = aggregate(rows, metric).filter((s) => s.transfer === transfer);
  if (stats.length === 0) {
    throw new SchemaMismatchError(`no rows for transfer ${JSON.stringify(transfer)}`);
  }
  const vs = axisValues(stats, "v");
  const lambdas = axisValues(stats, "lambda");
  if (vs.length < 2 || lambdas.length < 2) {
    throw new SchemaMismatchError(
      `heatmap needs a 2-d (v, lambda) grid, got ${vs.length} x ${lambdas.length}`,
    );
  }
  const byKey = new Map(stats.map((s) => [`${s.v}|${s.lambda}`, s.mean]));
  const cells: [number, number, number][] = [];
  for (let i = 0; i < vs.length; i++) {
    for (let j = 0; j < lambdas.length; j++) {
      const mean = byKey.get(`${vs[i]}|${lambdas[j]}`);
      if (mean !== undefined) cells.push([i, j, mean]);
    }
  }
  return heat(vs.map(fmtV), lambdas.map(fmtV), cells, {
    title: `${metric} (${transfer})`,
    xName: "input weight coefficient v",
    yName: "spectral radius",
  });
}

/** Approximation error against order, with a log-scale inset. */
export function taylorErrorOption(rows: TaylorErrorRow[]): FigureOption {
  const sorted = [...rows].sort((a, b) => a.m - b.m);
  const data = sorted.map((r) => [r.m, r.rmse] as [number, number]);
  return {
    ...BASE,
    title: { text: "distance of series truncations to tanh", left: "center" },
    grid: [
      { left: 70, right: 40, top: 60, bottom: 60 },
      { right: 70, top: 90, width: "32%", height: "32%" },
    ],
    xAxis: [
      { type: "value", gridIndex: 0, name: "order m", nameLocation: "middle", nameGap: 28, minInterval: 1 },
      { type: "value", gridIndex: 1, minInterval: 1, axisLabel: { fontSize: 9 } },
    ],
    yAxis: [
      { type: "value", gridIndex: 0, name: "RMSE", nameLocation: "middle", nameGap: 48 },
      { type: "log", gridIndex: 1, axisLabel: { fontSize: 9 } },
    ],
    series: [
      { type: "line", data, xAxisIndex: 0, yAxisIndex: 0, symbol: "circle" },
      { type: "line", data, xAxisIndex: 1, yAxisIndex: 1, symbol: "circle", symbolSize: 3 },
    ],
  };
}
