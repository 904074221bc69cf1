"""Per-day query budget.

Search engines meter queries per client per day, so the ledger counts what was
issued today (UTC) and refuses the first call past the limit. Usage can be
persisted to a sidecar file; the limit itself always comes from configuration.
"""

from __future__ import annotations

import json
from datetime import datetime, timezone
from pathlib import Path

from .errors import BudgetExhausted
from .ioutil import atomic_write_text


def utc_day_key() -> str:
    """The current UTC calendar date, e.g. '2026-08-18'."""
    return datetime.now(timezone.utc).date().isoformat()


class BudgetLedger:
    def __init__(self, daily_limit: int, path=None, today_fn=utc_day_key,
                 day_key: str | None = None, used_today: int = 0, total_issued: int = 0):
        if daily_limit < 1:
            raise ValueError("daily_limit must be >= 1")
        self.daily_limit = daily_limit
        self.path = Path(path) if path is not None else None
        self.today_fn = today_fn
        self.day_key = day_key if day_key is not None else today_fn()
        self.used_today = used_today
        self.total_issued = total_issued

    @classmethod
    def open(cls, daily_limit: int, path, today_fn=utc_day_key) -> "BudgetLedger":
        """Load persisted usage from the sidecar at path, or start fresh."""
        target = Path(path)
        state: dict = {}
        if target.exists():
            try:
                state = json.loads(target.read_text(encoding="utf-8"))
            except (json.JSONDecodeError, UnicodeDecodeError) as exc:
                raise ValueError(f"{target}: ledger file is not valid JSON: {exc}") from exc
        ledger = cls(
            daily_limit,
            path=target,
            today_fn=today_fn,
            day_key=state.get("day_key"),
            used_today=int(state.get("used_today", 0)),
            total_issued=int(state.get("total_issued", 0)),
        )
        ledger._roll_day()
        return ledger

    def _roll_day(self) -> None:
        today = self.today_fn()
        if today != self.day_key:
            self.day_key = today
            self.used_today = 0

    def charge(self) -> None:
        """Spend one query from today's budget.

        Raises BudgetExhausted when the day's allowance is already used up,
        leaving all counters untouched.
        """
        self._roll_day()
        if self.used_today >= self.daily_limit:
            raise BudgetExhausted(
                f"daily query limit of {self.daily_limit} reached for {self.day_key}"
            )
        self.used_today += 1
        self.total_issued += 1
        if self.path is not None:
            self.save()

    def snapshot(self) -> dict:
        return {
            "daily_limit": self.daily_limit,
            "day_key": self.day_key,
            "used_today": self.used_today,
            "total_issued": self.total_issued,
        }

    def save(self) -> None:
        if self.path is None:
            raise ValueError("ledger has no backing path")
        state = {
            "day_key": self.day_key,
            "used_today": self.used_today,
            "total_issued": self.total_issued,
        }
        atomic_write_text(self.path, json.dumps(state, indent=2, sort_keys=True) + "\n")
