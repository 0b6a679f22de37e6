/** One tuner pane: sliders, stage tabs, preview and stats for one state. */

import { postTriangulate } from "./api.js";
import { PaneController, type PaneView } from "./controller.js";
import { LIMITS, STAGES, type StageName, type TunerState } from "./state.js";
import { stageImageUrl, statsLine } from "./viewmodel.js";

interface SliderRow {
	root: HTMLElement;
	input: HTMLInputElement;
	value: HTMLElement;
}

function sliderRow(
	label: string,
	min: number,
	max: number,
	value: number,
	onInput: (v: number) => void,
): SliderRow {
	const root = document.createElement("label");
	root.className = "slider-row";
	const title = document.createElement("span");
	title.textContent = label;
	const shown = document.createElement("span");
	shown.className = "mono value";
	shown.textContent = String(value);
	const input = document.createElement("input");
	input.type = "range";
	input.min = String(min);
	input.max = String(max);
	input.value = String(value);
	input.addEventListener("input", () => {
		shown.textContent = input.value;
		onInput(Number(input.value));
	});
	root.append(title, shown, input);
	return { root, input, value: shown };
}

export class Pane {
	readonly root: HTMLElement;
	readonly controller: PaneController;
	private readonly img: HTMLImageElement;
	private readonly stats: HTMLElement;
	private readonly error: HTMLElement;
	private readonly spinner: HTMLElement;
	private readonly tSlider: SliderRow;
	private readonly dSlider: SliderRow;
	private readonly seedInput: HTMLInputElement;
	private readonly randToggle: HTMLInputElement;
	private readonly randCount: HTMLInputElement;
	private readonly stageButtons = new Map<StageName, HTMLButtonElement>();

	constructor(initial: TunerState, onStateChange?: (s: TunerState) => void) {
		this.controller = new PaneController(
			(body) => postTriangulate(body),
			(view) => {
				this.render(view);
				onStateChange?.(view.state);
			},
			initial,
		);

		this.root = document.createElement("section");
		this.root.className = "pane";

		const controls = document.createElement("div");
		controls.className = "controls";
		this.tSlider = sliderRow(
			"threshold",
			LIMITS.threshold.min,
			LIMITS.threshold.max,
			initial.threshold,
			(v) => this.controller.setParams({ threshold: v }),
		);
		this.dSlider = sliderRow(
			"density",
			LIMITS.density.min,
			LIMITS.density.max,
			initial.density,
			(v) => this.controller.setParams({ density: v }),
		);

		const seedRow = document.createElement("label");
		seedRow.className = "field-row";
		seedRow.append("seed");
		this.seedInput = document.createElement("input");
		this.seedInput.type = "number";
		this.seedInput.min = "0";
		this.seedInput.value = String(initial.seed);
		this.seedInput.addEventListener("change", () =>
			this.controller.setParams({ seed: Number(this.seedInput.value) }),
		);
		seedRow.append(this.seedInput);

		const randRow = document.createElement("label");
		randRow.className = "field-row";
		this.randToggle = document.createElement("input");
		this.randToggle.type = "checkbox";
		this.randToggle.checked = initial.randomMode;
		this.randToggle.addEventListener("change", () =>
			this.controller.setParams({ randomMode: this.randToggle.checked }),
		);
		this.randCount = document.createElement("input");
		this.randCount.type = "number";
		this.randCount.min = String(LIMITS.randomCount.min);
		this.randCount.value = String(initial.randomCount);
		this.randCount.addEventListener("change", () =>
			this.controller.setParams({ randomCount: Number(this.randCount.value) }),
		);
		randRow.append(this.randToggle, "random points", this.randCount);

		controls.append(this.tSlider.root, this.dSlider.root, seedRow, randRow);

		const tabs = document.createElement("nav");
		tabs.className = "stage-tabs";
		for (const stage of STAGES) {
			const b = document.createElement("button");
			b.textContent = stage;
			b.addEventListener("click", () => this.controller.setParams({ stage }));
			this.stageButtons.set(stage, b);
			tabs.append(b);
		}

		this.spinner = document.createElement("span");
		this.spinner.className = "spinner";
		this.spinner.textContent = "…";
		tabs.append(this.spinner);

		this.img = document.createElement("img");
		this.img.className = "preview";
		this.img.alt = "triangulated preview";

		this.stats = document.createElement("p");
		this.stats.className = "stats mono";
		this.error = document.createElement("p");
		this.error.className = "error";

		this.root.append(controls, tabs, this.img, this.stats, this.error);
		this.render(this.controller.view());
	}

	private render(view: PaneView): void {
		const { state } = view;
		this.tSlider.input.value = String(state.threshold);
		this.tSlider.value.textContent = String(state.threshold);
		this.dSlider.input.value = String(state.density);
		this.dSlider.value.textContent = String(state.density);
		this.randCount.disabled = !state.randomMode;
		this.dSlider.input.disabled = state.randomMode;
		for (const [stage, button] of this.stageButtons) {
			button.classList.toggle("active", stage === state.stage);
		}
		this.spinner.style.visibility = view.pending ? "visible" : "hidden";

		const url = stageImageUrl(state, view.response);
		if (url) {
			this.img.src = url;
			this.img.style.display = "";
		} else {
			this.img.style.display = "none";
		}
		if (view.response) {
			this.stats.textContent = statsLine(view.response).text;
		} else {
			this.stats.textContent = state.imageId ? "" : "upload an image to begin";
		}
		this.error.textContent = view.error ?? "";
		this.error.style.display = view.error ? "" : "none";
	}
}
