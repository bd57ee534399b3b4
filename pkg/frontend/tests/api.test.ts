/** API client behavior: routing, encoding, errors, de-duplication. */

import { describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { ALPHA_ID, GOLDEN, mockApi } from "./helpers.js";

describe("api client", () => {
  it("fetches the product listing", async () => {
    const { fetchFn } = mockApi();
    const client = new ApiClient("", fetchFn);
    const products = await client.products();
    expect(products.map((p) => p.productId)).toEqual(
      GOLDEN.products.map((p) => p.productId),
    );
  });

  it("url-encodes multiword aspect terms", async () => {
    const seen: string[] = [];
    const { fetchFn } = mockApi();
    const client = new ApiClient("", async (input) => {
      seen.push(input);
      return fetchFn(input);
    });
    await client.sentences(ALPHA_ID, "screen", "screen size");
    expect(seen[0]).toContain("/aspects/screen/screen%20size/sentences");
  });

  it("prefixes the configured base url", async () => {
    const seen: string[] = [];
    const client = new ApiClient("http://api.example:9000", async (input) => {
      seen.push(input);
      return new Response("[]", { status: 200 });
    });
    await client.products();
    expect(seen[0]).toBe("http://api.example:9000/products");
  });

  it("raises ApiError with the http status", async () => {
    const client = new ApiClient("", async () =>
      new Response("{}", { status: 503 }),
    );
    await expect(client.products()).rejects.toMatchObject({ status: 503 });
    await expect(client.products()).rejects.toBeInstanceOf(ApiError);
  });

  it("deduplicates in-flight requests per url only while pending", async () => {
    const { fetchFn, counts } = mockApi();
    const client = new ApiClient("", fetchFn);
    await Promise.all([client.products(), client.products()]);
    expect(counts.products).toBe(1);
    await client.products(); // a later call fetches again
    expect(counts.products).toBe(2);
  });
});
