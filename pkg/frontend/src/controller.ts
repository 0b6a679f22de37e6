/** Per-pane controller: debounced requests with last-issued-wins delivery.

The DOM layer owns widgets; this owns the request loop. Slider movement
patches the state and schedules one service call 150 ms after the last
change; responses carry the id of the request that produced them and
anything older than the latest issued id is dropped, so out-of-order
arrivals can never show stale previews.
*/

import type { TriangulateResponse } from "./api.js";
import { requestBody, sameRequest, type TunerState, withParam } from "./state.js";

export const DEBOUNCE_MS = 150;

export type PostFn = (body: Record<string, unknown>) => Promise<TriangulateResponse>;

export interface PaneView {
	state: TunerState;
	pending: boolean;
	response: TriangulateResponse | null;
	error: string | null;
}

export class PaneController {
	private state: TunerState;
	private timer: ReturnType<typeof setTimeout> | null = null;
	private nextRequestId = 0;
	private latestIssued = 0;
	private latestApplied = 0;
	private response: TriangulateResponse | null = null;
	private error: string | null = null;
	private pending = false;

	constructor(
		private readonly post: PostFn,
		private readonly onRender: (view: PaneView) => void,
		initial: TunerState,
	) {
		this.state = initial;
	}

	view(): PaneView {
		return {
			state: this.state,
			pending: this.pending,
			response: this.response,
			error: this.error,
		};
	}

	getState(): TunerState {
		return this.state;
	}

	/** Patch parameters; triangulation is re-requested once, debounced. */
	setParams(patch: Partial<TunerState>): void {
		const next = withParam(this.state, patch);
		const needsRun = !sameRequest(next, this.state) || this.response === null;
		this.state = next;
		if (this.state.imageId && needsRun) {
			this.schedule();
		}
		this.render();
	}

	/** Replace the whole state (URL restore, image upload). */
	reset(state: TunerState): void {
		this.state = withParam(state, {});
		this.response = null;
		this.error = null;
		if (this.state.imageId) this.schedule();
		this.render();
	}

	/** Run immediately, skipping the debounce window. */
	flush(): void {
		if (this.timer !== null) {
			clearTimeout(this.timer);
			this.timer = null;
			this.issue();
		}
	}

	private schedule(): void {
		if (this.timer !== null) clearTimeout(this.timer);
		this.pending = true;
		this.timer = setTimeout(() => {
			this.timer = null;
			this.issue();
		}, DEBOUNCE_MS);
	}

	private issue(): void {
		const id = ++this.nextRequestId;
		this.latestIssued = id;
		const body = requestBody(this.state);
		this.post(body).then(
			(response) => this.deliver(id, response, null),
			(err) => this.deliver(id, null, err instanceof Error ? err.message : String(err)),
		);
	}

	private deliver(id: number, response: TriangulateResponse | null, error: string | null): void {
		// last issued wins regardless of arrival order
		if (id !== this.latestIssued || id <= this.latestApplied) return;
		this.latestApplied = id;
		this.pending = this.timer !== null;
		if (response !== null) {
			this.response = response;
			this.error = null;
		} else {
			// keep the previous preview; surface the error inline
			this.error = error;
		}
		this.render();
	}

	private render(): void {
		this.onRender(this.view());
	}
}
