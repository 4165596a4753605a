import type {
  ItemDetailDoc,
  LayoutDoc,
  NetworkDoc,
  RankDoc,
  SummaryDoc,
} from "./types.js";

/** Structured error surfaced by the API as {"error": {code, message}}. */
export class ApiError extends Error {
  constructor(
    public readonly code: string,
    message: string,
    public readonly status: number,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function fetchJson<T>(url: string): Promise<T> {
  const response = await fetch(url);
  const body = await response.json();
  if (!response.ok) {
    const err = (body as { error?: { code?: string; message?: string } }).error;
    throw new ApiError(
      err?.code ?? "unknown",
      err?.message ?? `request failed with status ${response.status}`,
      response.status,
    );
  }
  return body as T;
}

function query(params: Record<string, string | number | undefined>): string {
  const search = new URLSearchParams();
  for (const [key, value] of Object.entries(params)) {
    if (value !== undefined) search.set(key, String(value));
  }
  const text = search.toString();
  return text ? `?${text}` : "";
}

/** Thin client for the inventory analysis API; all reads, no state. */
export class ApiClient {
  constructor(private readonly baseUrl: string = "") {}

  summary(groupBy: string, order: string): Promise<SummaryDoc> {
    return fetchJson(
      `${this.baseUrl}/api/summary${query({ group_by: groupBy, order })}`,
    );
  }

  network(): Promise<NetworkDoc> {
    return fetchJson(`${this.baseUrl}/api/network`);
  }

  layoutGrouped(opts: { seed?: number; ticks?: number } = {}): Promise<LayoutDoc> {
    return fetchJson(
      `${this.baseUrl}/api/layout/grouped${query({ seed: opts.seed, ticks: opts.ticks })}`,
    );
  }

  layoutRadial(
    keyword: string,
    opts: { seed?: number; ticks?: number } = {},
  ): Promise<LayoutDoc> {
    return fetchJson(
      `${this.baseUrl}/api/layout/radial${query({
        keyword,
        seed: opts.seed,
        ticks: opts.ticks,
      })}`,
    );
  }

  rank(keyword: string): Promise<RankDoc> {
    return fetchJson(`${this.baseUrl}/api/rank${query({ keyword })}`);
  }

  item(itemId: string): Promise<ItemDetailDoc> {
    return fetchJson(`${this.baseUrl}/api/items/${encodeURIComponent(itemId)}`);
  }
}
