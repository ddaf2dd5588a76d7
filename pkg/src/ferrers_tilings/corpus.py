"""Named shape corpora read from a small INI file.

The bundled file lives in ``data/corpus.cfg``; ``FERRERS_CORPUS`` may point
at a replacement with the same layout.
"""

from __future__ import annotations

import configparser
import os
from importlib import resources

from .errors import InvalidParams
from .shapes import TilingParams, make_params

CORPUS_ENV = "FERRERS_CORPUS"


def _read_config() -> configparser.ConfigParser:
    cfg = configparser.ConfigParser()
    path = os.environ.get(CORPUS_ENV)
    if path:
        with open(path, encoding="utf-8") as fh:
            cfg.read_file(fh)
    else:
        text = resources.files("ferrers_tilings").joinpath("data/corpus.cfg").read_text("utf-8")
        cfg.read_string(text)
    return cfg


def corpus_names() -> list[str]:
    return _read_config().sections()


def load_corpus(name: str = "general") -> list[TilingParams]:
    """Every ``(shape, d)`` pair listed in the section ``name``."""
    cfg = _read_config()
    if not cfg.has_section(name):
        raise InvalidParams(f"no corpus named {name!r}")
    out = []
    for line in cfg.get(name, "shapes").splitlines():
        line = line.strip()
        if not line:
            continue
        try:
            parts, ds = line.split(":")
            ds_list = [int(x) for x in ds.split()]
        except ValueError:
            raise InvalidParams(f"bad corpus line {line!r}") from None
        out.extend(make_params(parts.strip(), d) for d in ds_list)
    return out
