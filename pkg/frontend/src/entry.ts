/** Browser entry point; tests import boot() from main directly. */

import { boot } from "./main.js";

void boot();
