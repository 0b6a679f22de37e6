/** Pure presentation helpers, kept DOM-free so they are unit-testable. */

import { finalImageUrl, originalImageUrl, type TriangulateResponse } from "./api.js";
import type { TunerState } from "./state.js";

export interface StatsLine {
	edgePixels: number;
	vertices: number;
	triangles: number;
	text: string;
}

/** Counts for display; triangle/vertex counts are read off the mesh that
 * is being rendered, so the numbers can never disagree with the picture. */
export function statsLine(response: TriangulateResponse): StatsLine {
	const vertices = response.mesh.vertices.length;
	const triangles = response.mesh.triangles.length;
	const edgePixels = response.stats.edge_pixel_count;
	return {
		edgePixels,
		vertices,
		triangles,
		text: `|S| ${edgePixels} · ${vertices} vertices · ${triangles} triangles`,
	};
}

/** Which image the active stage view should display, if any. */
export function stageImageUrl(
	state: TunerState,
	response: TriangulateResponse | null,
): string | null {
	if (state.stage === "original") {
		return state.imageId ? originalImageUrl(state.imageId) : null;
	}
	if (response === null) return null;
	if (state.stage === "final") return finalImageUrl(response);
	return response.stages[state.stage] ?? null;
}
