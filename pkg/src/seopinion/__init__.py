"""SEOpinion: aspect-hierarchy opinion summarization for e-commerce pages."""

__version__ = "0.1.0"
