#!/usr/bin/env ts-node
/** Spatiotemporal heatmap from a quench heatmap CSV. Usage: --in quench_heatmap.csv --out heatmap.svg */

import { renderHeatmap, runScript } from "./render";

if (require.main === module) {
  process.exit(runScript(renderHeatmap, process.argv.slice(2)));
}
