#!/usr/bin/env ts-node
/** Fidelity/rotation/IPR overlay from a quench series CSV. Usage: --in quench.csv --out overlay.svg */

import { renderSeriesOverlay, runScript } from "./render";

if (require.main === module) {
  process.exit(runScript(renderSeriesOverlay, process.argv.slice(2)));
}
