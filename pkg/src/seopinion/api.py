"""Read-only HTTP service over a persisted summary store.

Readers always see one whole store version: every handler takes a single
snapshot reference up front and derives the entire response from it, while
the pipeline-trigger endpoint swaps in a fresh immutable store atomically.
Each successful response carries the store version in X-Store-Version.
"""

from __future__ import annotations

import threading
from pathlib import Path

from fastapi import FastAPI, HTTPException, Response
from fastapi.middleware.cors import CORSMiddleware
from pydantic import BaseModel, Field

from .aspects import GENERAL_CHILD
from .config import PipelineConfig
from .errors import SchemaError, SeopinionError
from .ingestion import read_corpus
from .summary import AspectSummary, SummaryStore, load_store, run_pipeline

VERSION_HEADER = "X-Store-Version"


class StoreManager:
    """Holds the current immutable store snapshot; swap is atomic."""

    def __init__(self, store: SummaryStore | None = None) -> None:
        self._store = store
        self.run_lock = threading.Lock()  # single-flight pipeline guard

    def snapshot(self) -> SummaryStore | None:
        return self._store

    def swap(self, store: SummaryStore) -> None:
        self._store = store


# -- response schemas --

class CategoryBrief(BaseModel):
    term: str
    nSentences: int
    rating: float | None


class ProductListItem(BaseModel):
    productId: str
    title: str
    siteId: str
    totalSentences: int
    topCategories: list[CategoryBrief]


class SummaryNode(BaseModel):
    term: str
    nSentences: int
    nPos: int
    nNeg: int
    rating: float | None
    children: list["SummaryNode"] = Field(default_factory=list)


class ProductSummaryResponse(BaseModel):
    productId: str
    title: str
    siteId: str
    totalSentences: int
    categories: list[SummaryNode]


class SentenceItem(BaseModel):
    text: str
    polarity: str


class RunRequest(BaseModel):
    corpusPath: str
    thetaSel: float | None = None
    thetaClu: float | None = None
    minSupport: int | None = None
    thetaSubj: float | None = None
    thetaMap: float | None = None


class RunResponse(BaseModel):
    runId: str
    status: str


def _node(summary: AspectSummary) -> SummaryNode:
    return SummaryNode(
        term=summary.term,
        nSentences=summary.n_sentences,
        nPos=summary.n_pos,
        nNeg=summary.n_neg,
        rating=summary.rating,
        children=[_node(c) for c in summary.children],
    )


def create_app(
    store_path: str | Path | None = None,
    manager: StoreManager | None = None,
    base_config: PipelineConfig | None = None,
) -> FastAPI:
    """Build the service; loads `store_path` when it exists."""
    app = FastAPI(title="seopinion", version="0.1.0")
    # the explorer UI may be served from another origin; the API is read-only
    # apart from the single-flight pipeline trigger
    app.add_middleware(
        CORSMiddleware,
        allow_origins=["*"],
        allow_methods=["GET", "POST"],
        allow_headers=["*"],
        expose_headers=[VERSION_HEADER],
    )
    if manager is None:
        manager = StoreManager()
    if store_path is not None and Path(store_path).exists():
        manager.swap(load_store(store_path))
    app.state.manager = manager
    app.state.store_path = Path(store_path) if store_path is not None else None
    config = base_config or PipelineConfig()

    def require_store() -> SummaryStore:
        store = manager.snapshot()
        if store is None:
            raise HTTPException(
                status_code=503,
                detail={"code": "no_store", "message": "no summary store loaded; run the pipeline first"},
            )
        return store

    @app.get("/products", response_model=list[ProductListItem])
    def list_products(response: Response) -> list[ProductListItem]:
        store = require_store()
        response.headers[VERSION_HEADER] = store.version
        return [
            ProductListItem(
                productId=s.product_id,
                title=s.title,
                siteId=s.site_id,
                totalSentences=s.total_sentences,
                topCategories=[
                    CategoryBrief(term=c.term, nSentences=c.n_sentences, rating=c.rating)
                    for c in s.categories
                ],
            )
            for s in store.summaries.values()
        ]

    @app.get("/products/{product_id}/summary", response_model=ProductSummaryResponse)
    def product_summary(product_id: str, response: Response) -> ProductSummaryResponse:
        store = require_store()
        summary = store.summaries.get(product_id)
        if summary is None:
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_product", "message": f"no product {product_id!r}"},
            )
        response.headers[VERSION_HEADER] = store.version
        return ProductSummaryResponse(
            productId=summary.product_id,
            title=summary.title,
            siteId=summary.site_id,
            totalSentences=summary.total_sentences,
            categories=[_node(c) for c in summary.categories],
        )

    @app.get(
        "/products/{product_id}/aspects/{category}/{child}/sentences",
        response_model=list[SentenceItem],
    )
    def aspect_sentences(
        product_id: str, category: str, child: str, response: Response
    ) -> list[SentenceItem]:
        store = require_store()
        if product_id not in store.summaries:
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_product", "message": f"no product {product_id!r}"},
            )
        cat = store.hierarchy.category_for(category)
        if cat is None or (child != GENERAL_CHILD and child not in [c.term for c in cat.children]):
            raise HTTPException(
                status_code=404,
                detail={"code": "unknown_aspect", "message": f"no aspect {category!r}/{child!r}"},
            )
        response.headers[VERSION_HEADER] = store.version
        return [
            SentenceItem(text=t, polarity=p)
            for t, p in store.sentence_list(product_id, category, child)
        ]

    @app.post("/pipeline/run", response_model=RunResponse)
    def pipeline_run(request: RunRequest, response: Response) -> RunResponse:
        if not manager.run_lock.acquire(blocking=False):
            raise HTTPException(
                status_code=409,
                detail={"code": "run_in_progress", "message": "a pipeline run is already in progress"},
            )
        try:
            corpus_path = Path(request.corpusPath)
            if not corpus_path.exists():
                raise HTTPException(
                    status_code=400,
                    detail={"code": "bad_corpus", "message": f"corpus not found: {corpus_path}"},
                )
            run_config = config.with_overrides(
                theta_sel=request.thetaSel,
                theta_clu=request.thetaClu,
                min_support=request.minSupport,
                theta_subj=request.thetaSubj,
                theta_map=request.thetaMap,
            )
            try:
                corpus = read_corpus(corpus_path)
                if not corpus.records:
                    raise SchemaError("corpus has no records")
                store = run_pipeline(corpus, run_config)
            except (SeopinionError, ValueError) as exc:
                raise HTTPException(
                    status_code=400, detail={"code": "bad_corpus", "message": str(exc)}
                ) from exc
            manager.swap(store)
            response.headers[VERSION_HEADER] = store.version
            return RunResponse(runId=store.version, status="completed")
        finally:
            manager.run_lock.release()

    return app
