/** Instrumented fetch serving the golden store fixture (captured verbatim
 * from the HTTP service over the planted corpus). */

import golden from "./fixtures/golden.json";
import type {
  ProductListItem,
  ProductSummary,
  SentenceItem,
} from "../src/api.js";

export interface GoldenStore {
  version: string;
  products: ProductListItem[];
  summaries: Record<string, ProductSummary>;
  sentences: Record<string, Record<string, SentenceItem[]>>;
}

export const GOLDEN = golden as unknown as GoldenStore;

export const ALPHA_ID = GOLDEN.products.find((p) => p.title.startsWith("Alpha"))!.productId;
export const BETA_ID = GOLDEN.products.find((p) => p.title.startsWith("Beta"))!.productId;

export interface RequestCounts {
  products: number;
  summaries: number;
  sentences: number;
}

export interface MockApi {
  fetchFn: (input: string, init?: RequestInit) => Promise<Response>;
  counts: RequestCounts;
}

function json(body: unknown, status = 200): Response {
  return new Response(JSON.stringify(body), {
    status,
    headers: { "content-type": "application/json" },
  });
}

const SENTENCES_RE = /^\/products\/([^/]+)\/aspects\/([^/]+)\/([^/]+)\/sentences$/;
const SUMMARY_RE = /^\/products\/([^/]+)\/summary$/;

/**
 * options.sentenceStatus forces every sentences request to fail with the
 * given HTTP status; "network" rejects the fetch promise instead.
 */
export function mockApi(options: { sentenceStatus?: number | "network" } = {}): MockApi {
  const counts: RequestCounts = { products: 0, summaries: 0, sentences: 0 };
  const fetchFn = async (input: string): Promise<Response> => {
    const path = input;
    if (path === "/products") {
      counts.products += 1;
      return json(GOLDEN.products);
    }
    const summaryMatch = SUMMARY_RE.exec(path);
    if (summaryMatch) {
      counts.summaries += 1;
      const summary = GOLDEN.summaries[decodeURIComponent(summaryMatch[1])];
      return summary ? json(summary) : json({ detail: "unknown product" }, 404);
    }
    const sentencesMatch = SENTENCES_RE.exec(path);
    if (sentencesMatch) {
      counts.sentences += 1;
      if (options.sentenceStatus === "network") {
        throw new TypeError("network down");
      }
      if (options.sentenceStatus !== undefined) {
        return json({ detail: "forced" }, options.sentenceStatus);
      }
      const [, pid, category, child] = sentencesMatch;
      const key = `${decodeURIComponent(category)}/${decodeURIComponent(child)}`;
      const items = GOLDEN.sentences[decodeURIComponent(pid)]?.[key];
      return items ? json(items) : json({ detail: "unknown aspect" }, 404);
    }
    return json({ detail: "no route" }, 404);
  };
  return { fetchFn, counts };
}

/** Wait until pending fetch promises and re-renders settle. Response body
 * reads resolve on macrotasks, so timer ticks are required here. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 4; i += 1) {
    await new Promise((resolve) => setTimeout(resolve, 0));
  }
}
