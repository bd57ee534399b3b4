/** Typed client for the summary-store HTTP API. */

export interface CategoryBrief {
  term: string;
  nSentences: number;
  rating: number | null;
}

export interface ProductListItem {
  productId: string;
  title: string;
  siteId: string;
  totalSentences: number;
  topCategories: CategoryBrief[];
}

export interface SummaryNode {
  term: string;
  nSentences: number;
  nPos: number;
  nNeg: number;
  rating: number | null;
  children: SummaryNode[];
}

export interface ProductSummary {
  productId: string;
  title: string;
  siteId: string;
  totalSentences: number;
  categories: SummaryNode[];
}

export interface SentenceItem {
  text: string;
  polarity: "positive" | "negative";
}

export class ApiError extends Error {
  constructor(public readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

/**
 * Thin fetch wrapper with per-URL in-flight de-duplication, so a double
 * click on "view sentences" issues a single request.
 */
export class ApiClient {
  private inflight = new Map<string, Promise<unknown>>();

  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: FetchLike = (input, init) => fetch(input, init),
  ) {}

  private request<T>(path: string): Promise<T> {
    const url = `${this.baseUrl}${path}`;
    const pending = this.inflight.get(url);
    if (pending) {
      return pending as Promise<T>;
    }
    const promise = this.fetchFn(url)
      .then(async (response) => {
        if (!response.ok) {
          throw new ApiError(response.status, `${response.status} for ${path}`);
        }
        return (await response.json()) as T;
      })
      .finally(() => {
        this.inflight.delete(url);
      });
    this.inflight.set(url, promise);
    return promise;
  }

  products(): Promise<ProductListItem[]> {
    return this.request("/products");
  }

  summary(productId: string): Promise<ProductSummary> {
    return this.request(`/products/${encodeURIComponent(productId)}/summary`);
  }

  sentences(productId: string, category: string, child: string): Promise<SentenceItem[]> {
    const path =
      `/products/${encodeURIComponent(productId)}` +
      `/aspects/${encodeURIComponent(category)}/${encodeURIComponent(child)}/sentences`;
    return this.request(path);
  }
}
