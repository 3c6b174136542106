// Thin client for the portrait service; the fetch function is injectable
// so tests can run against recorded payloads.

import type { Params, PortraitDocument, PortraitRequest, PresetEntry } from "./types.js";

export type FetchLike = (url: string, init?: RequestInit) => Promise<Response>;

export class ValidationError extends Error {
  constructor(public detail: unknown) {
    super("parameter validation failed");
  }
}

export class ServiceDownError extends Error {}

export class ApiClient {
  constructor(
    private baseUrl: string,
    private fetchFn: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request(path: string, init?: RequestInit): Promise<Response> {
    let resp: Response;
    try {
      resp = await this.fetchFn(this.baseUrl + path, init);
    } catch (err) {
      throw new ServiceDownError(String(err));
    }
    if (resp.status === 422) {
      throw new ValidationError(await resp.json().catch(() => null));
    }
    if (!resp.ok) {
      throw new Error(`${path}: HTTP ${resp.status}`);
    }
    return resp;
  }

  async presets(): Promise<PresetEntry[]> {
    const resp = await this.request("/presets");
    return (await resp.json()) as PresetEntry[];
  }

  async analyze(params: Params): Promise<unknown> {
    const resp = await this.request("/analyze", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify({ params }),
    });
    return resp.json();
  }

  async portrait(req: PortraitRequest): Promise<PortraitDocument> {
    const resp = await this.request("/portrait", {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(req),
    });
    return (await resp.json()) as PortraitDocument;
  }
}
