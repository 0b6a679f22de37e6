/** Page wiring: upload, the main pane, compare mode and URL state sync. */

import { uploadImage } from "./api.js";
import { Pane } from "./pane.js";
import { fromQuery, toQuery, type TunerState } from "./state.js";

function syncUrl(state: TunerState): void {
	const q = toQuery(state).toString();
	history.replaceState(null, "", q ? `?${q}` : location.pathname);
}

function init(): void {
	const app = document.getElementById("app");
	if (!app) throw new Error("missing #app container");

	const header = document.createElement("header");
	const title = document.createElement("h1");
	title.textContent = "lowpoly tuner";
	const file = document.createElement("input");
	file.type = "file";
	file.accept = "image/png,image/jpeg";
	const compare = document.createElement("button");
	compare.textContent = "compare";
	compare.className = "compare-toggle";
	const hint = document.createElement("span");
	hint.className = "hint";
	header.append(title, file, compare, hint);

	const panes = document.createElement("main");
	panes.className = "panes";
	app.append(header, panes);

	// the primary pane drives the shareable URL
	const primary = new Pane(fromQuery(location.search), syncUrl);
	panes.append(primary.root);

	let secondary: Pane | null = null;
	compare.addEventListener("click", () => {
		if (secondary) {
			secondary.root.remove();
			secondary = null;
			compare.classList.remove("active");
			return;
		}
		// comparison pane starts from the current parameters
		secondary = new Pane({ ...primary.controller.getState() });
		panes.append(secondary.root);
		compare.classList.add("active");
	});

	file.addEventListener("change", async () => {
		const chosen = file.files?.[0];
		if (!chosen) return;
		hint.textContent = "uploading…";
		try {
			const up = await uploadImage(chosen);
			hint.textContent = `${up.width}×${up.height}`;
			for (const pane of [primary, secondary]) {
				if (!pane) continue;
				pane.controller.reset({ ...pane.controller.getState(), imageId: up.image_id });
			}
		} catch (e) {
			hint.textContent = e instanceof Error ? e.message : String(e);
		}
	});

	window.addEventListener("popstate", () => {
		primary.controller.reset(fromQuery(location.search));
	});
}

init();
