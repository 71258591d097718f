"""
Tokenizer: lowercase alphanumeric runs minus stopwords.
"""

import re
from typing import List

from .stopwords import STOPWORDS

_TOKEN_RE = re.compile(r"[^\W_]+")


def tokenize(text: str) -> List[str]:
    """Split text on non-alphanumeric runs, lowercase, drop stopwords."""
    if not text:
        return []
    return [token for token in _TOKEN_RE.findall(text.lower()) if token not in STOPWORDS]
