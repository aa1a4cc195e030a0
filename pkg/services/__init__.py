# services/__init__.py
from .quot.quot_analyzer import QuotAnalyzer

__all__ = [
    "QuotAnalyzer",
]
