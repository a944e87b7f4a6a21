#!/usr/bin/env ts-node
/** Zero-mode site-profile figure from a modes CSV. Usage: --in modes.csv --out profile.svg */

import { renderProfile, runScript } from "./render";

if (require.main === module) {
  process.exit(runScript(renderProfile, process.argv.slice(2)));
}
