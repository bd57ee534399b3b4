"""Pipeline configuration with the tunable thresholds."""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from pathlib import Path


@dataclass(frozen=True)
class PipelineConfig:
    """Thresholds and resource paths for a full pipeline run.

    All thresholds are exposed on the CLI; the defaults below are what the
    acceptance fixtures are pinned against.
    """

    # aspect selection / clustering
    theta_sel: float = 0.55       # min cosine for a candidate aspect to join the popular set
    theta_clu: float = 0.50       # cluster-merge threshold
    min_support: int = 2          # records needed to keep an out-of-vocabulary candidate

    # opinion filtering / mapping
    theta_subj: float = 0.1       # normalized lexicon score needed to call a sentence opinionated
    theta_map: float = 0.7        # embedding similarity needed to map a noun to an aspect

    # polarity classification: "lexicon_baseline" or "linear_embedding"
    polarity_model: str = "lexicon_baseline"
    model_path: Path | None = None

    # None means: use the bundled data files
    lexicon_path: Path | None = None
    embeddings_path: Path | None = None

    def with_overrides(self, **kwargs) -> "PipelineConfig":
        """Return a copy with the given fields replaced (None values ignored)."""
        updates = {k: v for k, v in kwargs.items() if v is not None}
        return replace(self, **updates) if updates else self
