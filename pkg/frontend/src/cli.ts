#!/usr/bin/env node
import { readFileSync, writeFileSync } from "node:fs";
import process from "node:process";

import yargs from "yargs";
import { hideBin } from "yargs/helpers";

import { FIGURE_KINDS, FigureKind } from "./figures.js";
import { renderSvg } from "./render.js";
import { MissingMetricError, SchemaMismatchError } from "./schema.js";

export function main(argv: string[]): number {
  const args = yargs(argv)
    .scriptName("esn-plots")
    .usage("$0 --csv <file> --kind <kind> --metric <name> --out <img>")
    .option("csv", { type: "string", demandOption: true, describe: "results CSV path" })
    .option("kind", {
      type: "string",
      demandOption: true,
      choices: FIGURE_KINDS as unknown as string[],
      describe: "figure kind",
    })
    .option("metric", {
      type: "string",
      default: "",
      describe: "metric column to plot (defaults to rmse for taylor_error)",
    })
    .option("out", { type: "string", demandOption: true, describe: "output SVG path" })
    .option("transfer", { type: "string", default: "tanh", describe: "transfer for line_v/heatmap" })
    .option("v", { type: "number", default: 0.1, describe: "v slice for bars_m" })
    .option("width", { type: "number", default: 800 })
    .option("height", { type: "number", default: 600 })
    .strict()
    .parseSync();

  const kind = args.kind as FigureKind;
  if (kind !== "taylor_error" && args.metric === "") {
    process.stderr.write("error: --metric is required for this kind\n");
    return 2;
  }
  let csvText: string;
  try {
    csvText = readFileSync(args.csv, "utf-8");
  } catch (e) {
    process.stderr.write(`error: cannot read ${args.csv}: ${(e as Error).message}\n`);
    return 2;
  }
  try {
    const svg = renderSvg({
      csvText,
      kind,
      metric: args.metric,
      transfer: args.transfer,
      v: args.v,
      width: args.width,
      height: args.height,
    });
    writeFileSync(args.out, svg, "utf-8");
  } catch (e) {
    if (e instanceof SchemaMismatchError || e instanceof MissingMetricError) {
      process.stderr.write(`error: ${e.message}\n`);
      return 2;
    }
    throw e;
  }
  process.stdout.write(`wrote ${args.out}\n`);
  return 0;
}

const entry = process.argv[1] ?? "";
if (entry.endsWith("cli.js") || entry.endsWith("esn-plots")) {
  process.exit(main(hideBin(process.argv)));
}
