#!/usr/bin/env ts-node
/** Spectrum-vs-mu figure from a sweep CSV. Usage: --in sweep.csv --out spectrum.svg */

import { renderSpectrum, runScript } from "./render";

if (require.main === module) {
  process.exit(runScript(renderSpectrum, process.argv.slice(2)));
}
