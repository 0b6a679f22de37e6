import { describe, expect, it } from "vitest";

import {
	defaultState,
	fromQuery,
	requestBody,
	sameRequest,
	toQuery,
	withParam,
} from "../src/state.js";

describe("URL round trip", () => {
	it("restores an identical request from the query string", () => {
		const state = withParam(defaultState(), {
			imageId: "abc123",
			threshold: 75,
			density: 35,
			seed: 7,
			stage: "sobel",
		});
		const back = fromQuery(toQuery(state).toString());
		expect(back).toEqual(state);
		// identical request body means an identical (cached) preview
		expect(sameRequest(back, state)).toBe(true);
	});

	it("round-trips random mode and its count", () => {
		const state = withParam(defaultState(), {
			imageId: "id9",
			randomMode: true,
			randomCount: 1500,
		});
		const back = fromQuery(toQuery(state));
		expect(back.randomMode).toBe(true);
		expect(back.randomCount).toBe(1500);
		expect(requestBody(back).random_points).toBe(1500);
	});

	it("omits defaults from the query and fills them back in", () => {
		const q = toQuery(defaultState());
		expect(q.get("rand")).toBeNull();
		expect(q.get("stage")).toBeNull();
		const back = fromQuery(q);
		expect(back).toEqual(defaultState());
	});
});

describe("parameter clamping", () => {
	it("clamps sliders into their documented ranges", () => {
		const s = withParam(defaultState(), { threshold: 999, density: 0 });
		expect(s.threshold).toBe(255);
		expect(s.density).toBe(1);
	});

	it("rejects non-finite numbers", () => {
		const s = withParam(defaultState(), { threshold: Number.NaN });
		expect(s.threshold).toBe(0);
	});

	it("falls back to the final stage for unknown stage names", () => {
		const s = fromQuery("?stage=bogus");
		expect(s.stage).toBe("final");
	});
});

describe("request body", () => {
	it("maps state onto the service schema", () => {
		const body = requestBody(withParam(defaultState(), { imageId: "x" }));
		expect(body).toEqual({
			image_id: "x",
			threshold: 50,
			density: 60,
			seed: 0,
			random_points: null,
			include_frame: true,
			include_stages: false,
		});
	});

	it("requests stage images only for intermediate views", () => {
		const base = withParam(defaultState(), { imageId: "x" });
		expect(requestBody(withParam(base, { stage: "gray" })).include_stages).toBe(true);
		expect(requestBody(withParam(base, { stage: "final" })).include_stages).toBe(false);
		expect(requestBody(withParam(base, { stage: "original" })).include_stages).toBe(false);
	});
});
