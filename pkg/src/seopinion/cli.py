"""Command-line entry points: scrape | summarize | eval | serve.

Every flag can also be set through an environment variable with the
SEOPINION_ prefix (e.g. SEOPINION_PORT for serve --port).
"""

from __future__ import annotations

import json
import logging
import sys
from pathlib import Path

import click

from .aspects import AspectTerm, hierarchy_to_dict
from .config import PipelineConfig
from .errors import SeopinionError
from .evaluation import MetricReport, balanced_subsample, format_report_table, kfold_cv
from .ingestion import build_corpus, load_config_dir, read_corpus, write_corpus
from .nlp import load_bundled_embeddings, load_bundled_lexicon, pos_tag, preprocess, tokenize
from .opinions import (
    LEXICON_BASELINE,
    LINEAR_EMBEDDING,
    MappedOpinion,
    OpinionSentence,
    PolarityModel,
    classify_polarity,
    train_polarity_model,
)
from .summary import run_pipeline, save_store

logger = logging.getLogger(__name__)

_THRESHOLDS = [
    click.option("--theta-sel", type=float, default=None, help="candidate-selection similarity threshold"),
    click.option("--theta-clu", type=float, default=None, help="cluster-merge similarity threshold"),
    click.option("--min-support", type=int, default=None, help="records needed to keep an OOV candidate"),
    click.option("--theta-subj", type=float, default=None, help="subjectivity score threshold"),
    click.option("--theta-map", type=float, default=None, help="aspect-mapping similarity threshold"),
]


def _with_thresholds(fn):
    for option in reversed(_THRESHOLDS):
        fn = option(fn)
    return fn


@click.group(context_settings={"auto_envvar_prefix": "SEOPINION"})
@click.option("-v", "--verbose", is_flag=True, help="log at INFO level")
def main(verbose: bool) -> None:
    """Aspect-hierarchy opinion summaries for e-commerce product pages."""
    logging.basicConfig(
        level=logging.INFO if verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
    )


@main.command()
@click.option("--rules-dir", type=click.Path(exists=True, file_okay=False), required=True,
              help="directory of per-site *.rules files")
@click.option("--pages-dir", type=click.Path(exists=True, file_okay=False), required=True,
              help="directory with one subdirectory of saved *.html pages per site_id")
@click.option("--product-type", required=True, help="shared product type, e.g. Laptop")
@click.option("--corpus", "corpus_out", type=click.Path(dir_okay=False), required=True,
              help="output corpus JSON path")
def scrape(rules_dir: str, pages_dir: str, product_type: str, corpus_out: str) -> None:
    """Extract saved product pages into a corpus file."""
    configs = load_config_dir(rules_dir)
    pages: list[tuple[str, str]] = []
    for site_dir in sorted(p for p in Path(pages_dir).iterdir() if p.is_dir()):
        for page in sorted(site_dir.glob("*.html")):
            pages.append((site_dir.name, page.read_text(encoding="utf-8")))
    corpus = build_corpus(pages, configs, product_type)
    write_corpus(corpus, corpus_out)
    click.echo(f"wrote {len(corpus.records)} records to {corpus_out}")


@main.command()
@click.option("--corpus", "corpus_path", type=click.Path(exists=True, dir_okay=False), required=True)
@click.option("--store", "store_out", type=click.Path(dir_okay=False), required=True,
              help="output summary-store JSON path")
@click.option("--hierarchy", "hierarchy_out", type=click.Path(dir_okay=False), default=None,
              help="also write the hierarchy tree to this path")
@click.option("--model", type=click.Choice([LEXICON_BASELINE, LINEAR_EMBEDDING]),
              default=LEXICON_BASELINE, show_default=True)
@click.option("--model-file", type=click.Path(exists=True, dir_okay=False), default=None,
              help="trained model file (required for linear_embedding)")
@_with_thresholds
def summarize(corpus_path, store_out, hierarchy_out, model, model_file,
              theta_sel, theta_clu, min_support, theta_subj, theta_map) -> None:
    """Run both pipeline phases over a corpus and persist the store."""
    config = PipelineConfig(
        polarity_model=model,
        model_path=Path(model_file) if model_file else None,
    ).with_overrides(
        theta_sel=theta_sel, theta_clu=theta_clu, min_support=min_support,
        theta_subj=theta_subj, theta_map=theta_map,
    )
    try:
        corpus = read_corpus(corpus_path)
        store = run_pipeline(corpus, config)
    except (SeopinionError, ValueError) as exc:
        raise click.ClickException(str(exc)) from exc
    save_store(store, store_out)
    click.echo(f"store {store.version}: {len(store.summaries)} products -> {store_out}")
    if hierarchy_out:
        payload = hierarchy_to_dict(store.hierarchy)
        Path(hierarchy_out).write_text(
            json.dumps(payload, indent=2, ensure_ascii=False) + "\n", encoding="utf-8"
        )
        click.echo(f"hierarchy -> {hierarchy_out}")


def _load_labeled_pairs(path: Path) -> list[tuple[MappedOpinion, str]]:
    """Labeled file: JSON array of {text, label, aspect?}."""
    payload = json.loads(path.read_text(encoding="utf-8"))
    pairs: list[tuple[MappedOpinion, str]] = []
    for item in payload:
        tagged = pos_tag(tokenize(preprocess(item["text"])))
        sentence = OpinionSentence(
            text=item["text"], tagged=tagged, pos_score=0.0, neg_score=0.0
        )
        aspect = AspectTerm(term=item.get("aspect", "product"), source="direct", support=1)
        pairs.append((MappedOpinion(category=aspect, child=None, sentence=sentence), item["label"]))
    return pairs


class _LexiconClassifier:
    def __init__(self) -> None:
        self.lexicon = load_bundled_lexicon()
        self.model = PolarityModel(kind=LEXICON_BASELINE)

    def fit(self, examples) -> None:
        pass

    def predict(self, pair: MappedOpinion) -> str:
        return classify_polarity(pair, self.model, lexicon=self.lexicon)


class _LinearClassifier:
    def __init__(self) -> None:
        self.table = load_bundled_embeddings()
        self.model: PolarityModel | None = None

    def fit(self, examples) -> None:
        self.model = train_polarity_model(list(examples), self.table)

    def predict(self, pair: MappedOpinion) -> str:
        assert self.model is not None
        return classify_polarity(pair, self.model, table=self.table)


@main.command(name="eval")
@click.option("--data", "data_path", type=click.Path(exists=True, dir_okay=False), required=True,
              help="labeled sentences: JSON array of {text, label, aspect?}")
@click.option("--folds", type=int, default=10, show_default=True)
@click.option("--reps", type=int, default=10, show_default=True)
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--balance/--no-balance", default=False, show_default=True,
              help="average over balanced subsamples before cross-validating")
@click.option("--subsets", type=int, default=3, show_default=True)
@click.option("--out-prefix", default="eval_report", show_default=True,
              help="writes <prefix>.txt and <prefix>.json")
def eval_cmd(data_path, folds, reps, seed, balance, subsets, out_prefix) -> None:
    """Cross-validate the polarity classifiers on a labeled dataset."""
    pairs = _load_labeled_pairs(Path(data_path))
    datasets = (
        balanced_subsample(pairs, seed=seed, n_subsets=subsets) if balance else [list(pairs)]
    )
    configurations = [
        (LEXICON_BASELINE, _LexiconClassifier),
        (LINEAR_EMBEDDING, _LinearClassifier),
    ]
    rows = []
    results = {}
    for name, factory in configurations:
        reports = [
            kfold_cv(dataset, k=folds, reps=reps, seed=seed, classifier_factory=factory)
            for dataset in datasets
        ]
        n = len(reports)
        merged = {
            "precision": sum(r.precision for r in reports) / n,
            "recall": sum(r.recall for r in reports) / n,
            "f1": sum(r.f1 for r in reports) / n,
            "accuracy": sum(r.accuracy for r in reports) / n,
        }
        results[name] = {**merged, "nFolds": folds, "nReps": reps, "nSubsets": len(datasets)}
        rows.append((name, MetricReport(**merged, n_folds=folds, n_reps=reps)))
    table_text = format_report_table(rows)
    Path(f"{out_prefix}.txt").write_text(table_text + "\n", encoding="utf-8")
    Path(f"{out_prefix}.json").write_text(
        json.dumps(results, indent=2) + "\n", encoding="utf-8"
    )
    click.echo(table_text)
    click.echo(f"wrote {out_prefix}.txt and {out_prefix}.json")


@main.command()
@click.option("--store", "store_path", type=click.Path(dir_okay=False), required=True)
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(store_path: str, host: str, port: int) -> None:
    """Serve the summary store over HTTP."""
    import uvicorn

    from .api import create_app

    if not Path(store_path).exists():
        click.echo(f"note: {store_path} does not exist yet; endpoints return 503 until a run", err=True)
    app = create_app(store_path=store_path)
    uvicorn.run(app, host=host, port=port)


if __name__ == "__main__":
    main(sys.argv[1:])
