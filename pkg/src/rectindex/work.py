"""Query-work instrumentation."""
from dataclasses import dataclass


@dataclass
class WorkCounter:
    """Counts the elementary steps a query performs.

    Pass an instance through ``query(..., counter=...)``; every layer adds to
    the same object.
    """

    symbol_comparisons: int = 0
    trie_steps: int = 0
    range_visits: int = 0

    @property
    def total(self) -> int:
        return self.symbol_comparisons + self.trie_steps + self.range_visits

    def reset(self) -> None:
        self.symbol_comparisons = self.trie_steps = self.range_visits = 0
