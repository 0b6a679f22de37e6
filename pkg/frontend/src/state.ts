/** Tuner parameter state, shareable through the URL query string. */

export type StageName = "original" | "gray" | "sharp" | "sobel" | "wire" | "final";

export const STAGES: StageName[] = ["original", "gray", "sharp", "sobel", "wire", "final"];

export interface TunerState {
	imageId: string | null;
	threshold: number; // 0..255
	density: number; // 1..200
	seed: number;
	randomMode: boolean;
	randomCount: number;
	stage: StageName;
}

export const LIMITS = {
	threshold: { min: 0, max: 255 },
	density: { min: 1, max: 200 },
	seed: { min: 0, max: Number.MAX_SAFE_INTEGER },
	randomCount: { min: 3, max: 1_000_000 },
} as const;

export function defaultState(): TunerState {
	return {
		imageId: null,
		threshold: 50,
		density: 60,
		seed: 0,
		randomMode: false,
		randomCount: 1000,
		stage: "final",
	};
}

export function clamp(value: number, lo: number, hi: number): number {
	if (!Number.isFinite(value)) return lo;
	return Math.min(hi, Math.max(lo, Math.round(value)));
}

/** Normalizes arbitrary numeric input into the slider ranges. */
export function withParam(
	state: TunerState,
	patch: Partial<TunerState>,
): TunerState {
	const next = { ...state, ...patch };
	next.threshold = clamp(next.threshold, LIMITS.threshold.min, LIMITS.threshold.max);
	next.density = clamp(next.density, LIMITS.density.min, LIMITS.density.max);
	next.seed = clamp(next.seed, LIMITS.seed.min, LIMITS.seed.max);
	next.randomCount = clamp(next.randomCount, LIMITS.randomCount.min, LIMITS.randomCount.max);
	if (!STAGES.includes(next.stage)) next.stage = "final";
	return next;
}

export function toQuery(state: TunerState): URLSearchParams {
	const q = new URLSearchParams();
	if (state.imageId) q.set("img", state.imageId);
	q.set("t", String(state.threshold));
	q.set("d", String(state.density));
	q.set("seed", String(state.seed));
	if (state.randomMode) q.set("rand", String(state.randomCount));
	if (state.stage !== "final") q.set("stage", state.stage);
	return q;
}

export function fromQuery(query: string | URLSearchParams): TunerState {
	const q = typeof query === "string" ? new URLSearchParams(query) : query;
	const base = defaultState();
	const rand = q.get("rand");
	return withParam(base, {
		imageId: q.get("img"),
		threshold: q.has("t") ? Number(q.get("t")) : base.threshold,
		density: q.has("d") ? Number(q.get("d")) : base.density,
		seed: q.has("seed") ? Number(q.get("seed")) : base.seed,
		randomMode: rand !== null,
		randomCount: rand !== null ? Number(rand) : base.randomCount,
		stage: (q.get("stage") as StageName) ?? base.stage,
	});
}

/** The exact JSON body POST /triangulate expects for this state. */
export function requestBody(state: TunerState): Record<string, unknown> {
	return {
		image_id: state.imageId,
		threshold: state.threshold,
		density: state.density,
		seed: state.seed,
		random_points: state.randomMode ? state.randomCount : null,
		include_frame: true,
		include_stages: state.stage !== "original" && state.stage !== "final",
	};
}

/** True when two states would issue the same triangulation request. */
export function sameRequest(a: TunerState, b: TunerState): boolean {
	return JSON.stringify(requestBody(a)) === JSON.stringify(requestBody(b));
}
