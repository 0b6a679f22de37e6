/** Typed wrappers around the triangulation service endpoints. */

export interface UploadResult {
	image_id: string;
	width: number;
	height: number;
}

export interface MeshJson {
	vertices: [number, number][];
	triangles: [number, number, number][];
}

export interface StatsJson {
	edge_pixel_count: number;
	vertex_count: number;
	triangle_count: number;
	timings_ms: Record<string, number>;
	rng: string;
	backend: string;
}

export interface TriangulateResponse {
	image_id: string;
	config: Record<string, unknown>;
	width: number;
	height: number;
	image_png_base64: string;
	mesh: MeshJson;
	stats: StatsJson;
	stages: Partial<Record<string, string>>;
}

export class ServiceError extends Error {
	constructor(
		readonly status: number,
		message: string,
		readonly stage?: string,
	) {
		super(message);
	}
}

async function errorFrom(res: Response): Promise<ServiceError> {
	let message = `${res.status} ${res.statusText}`;
	let stage: string | undefined;
	try {
		const body = await res.json();
		const detail = body?.detail;
		if (typeof detail === "string") message = detail;
		else if (detail && typeof detail === "object") {
			message = detail.message ?? JSON.stringify(detail);
			stage = detail.stage;
		}
	} catch {
		// non-JSON error body; keep the status line
	}
	return new ServiceError(res.status, message, stage);
}

export async function uploadImage(file: File | Blob): Promise<UploadResult> {
	const form = new FormData();
	form.append("file", file);
	const res = await fetch("/images", { method: "POST", body: form });
	if (!res.ok) throw await errorFrom(res);
	return res.json();
}

export async function postTriangulate(
	body: Record<string, unknown>,
	signal?: AbortSignal,
): Promise<TriangulateResponse> {
	const res = await fetch("/triangulate", {
		method: "POST",
		headers: { "content-type": "application/json" },
		body: JSON.stringify(body),
		signal,
	});
	if (!res.ok) throw await errorFrom(res);
	return res.json();
}

export function originalImageUrl(imageId: string): string {
	return `/images/${imageId}`;
}

export function finalImageUrl(response: TriangulateResponse): string {
	return `data:image/png;base64,${response.image_png_base64}`;
}
