/** Per-slot request discipline: debounce, one request in flight, latest wins.
 *
 * Slider drags fire many parameter changes; the gate turns them into at most
 * one outstanding query. While a request is in flight newer parameters only
 * overwrite the pending slot, and when the reply lands the newest pending
 * query is issued. Tickets are monotonically increasing, and a reply is
 * applied only if its ticket is not older than the last applied one, so the
 * view can never regress to a stale response.
 */

type Timer = ReturnType<typeof setTimeout>;

export class RequestGate<Q, R> {
  private ticket = 0;
  private applied = 0;
  private inFlight = false;
  private pending: Q | undefined;
  private hasPending = false;
  private debounced: Q | undefined;
  private timer: Timer | undefined;

  constructor(
    private run: (query: Q) => Promise<R>,
    private deliver: (result: R, query: Q) => void,
    private fail: (error: unknown, query: Q) => void,
    private debounceMs = 150,
  ) {}

  /** True while a request is outstanding (for tests and busy indicators). */
  get busy(): boolean {
    return this.inFlight;
  }

  /** Schedule a query; earlier unsent ones are dropped. */
  request(query: Q): void {
    this.debounced = query;
    if (this.timer !== undefined) clearTimeout(this.timer);
    this.timer = setTimeout(() => {
      this.timer = undefined;
      this.issue(this.debounced as Q);
    }, this.debounceMs);
  }

  /** Issue immediately, bypassing the debounce (initial load, retry). */
  flush(query?: Q): void {
    if (this.timer !== undefined) {
      clearTimeout(this.timer);
      this.timer = undefined;
    }
    const q = query !== undefined ? query : this.debounced;
    if (q !== undefined) this.issue(q);
  }

  private issue(query: Q): void {
    if (this.inFlight) {
      this.pending = query;
      this.hasPending = true;
      return;
    }
    const ticket = ++this.ticket;
    this.inFlight = true;
    this.run(query).then(
      (result) => this.settle(ticket, () => this.deliver(result, query)),
      (error) => this.settle(ticket, () => this.fail(error, query)),
    );
  }

  private settle(ticket: number, apply: () => void): void {
    this.inFlight = false;
    if (ticket > this.applied) {
      this.applied = ticket;
      apply();
    }
    if (this.hasPending) {
      const next = this.pending as Q;
      this.pending = undefined;
      this.hasPending = false;
      this.issue(next);
    }
  }
}
