from dataclasses import dataclass
from typing import Iterable, Union

import pandas as pd

from ..core.errors import ArgumentError

PAIR_KEYS = ["dataset", "algorithm", "learner"]
ONLINE_MODES = ("online", "ns-online")


@dataclass
class ConsistencyReport:
    """Per-key batch/online AUC pairs and their absolute differences."""

    pairs: pd.DataFrame
    aggregates: pd.DataFrame

    @property
    def mean_abs_diff(self) -> float:
        return float(self.pairs["abs_diff"].mean())

    @classmethod
    def from_records(cls, records) -> "ConsistencyReport":
        return consistency_report(records)


def consistency_report(results: Union[pd.DataFrame, Iterable[dict]]) -> ConsistencyReport:
    """
    Pair batch and online AUCs on identical keys.

    `results` holds one AUC per (dataset, algorithm, learner, mode), plus
    `seed` when several seeds were run. Every batch row needs an online
    partner and vice versa.
    """
    frame = results if isinstance(results, pd.DataFrame) else pd.DataFrame(list(results))
    missing = {"mode", "auc", *PAIR_KEYS} - set(frame.columns)
    if missing:
        raise ArgumentError(f"Results lack columns {sorted(missing)}")
    keys = PAIR_KEYS + (["seed"] if "seed" in frame.columns else [])

    batch = frame[frame["mode"] == "batch"]
    online = frame[frame["mode"].isin(ONLINE_MODES)]
    if batch.duplicated(keys).any() or online.duplicated(keys).any():
        raise ArgumentError("Results hold more than one AUC per key and mode")
    merged = batch[keys + ["auc"]].merge(
        online[keys + ["auc"]], on=keys, how="outer", suffixes=("_batch", "_online"), indicator=True)
    unpaired = merged[merged["_merge"] != "both"]
    if merged.empty or not unpaired.empty:
        raise ArgumentError(f"{len(unpaired)} results have no batch/online partner")

    pairs = merged.drop(columns="_merge")
    pairs["abs_diff"] = (pairs["auc_batch"] - pairs["auc_online"]).abs()
    pairs = pairs.sort_values(keys).reset_index(drop=True)
    aggregates = (pairs.groupby(["algorithm", "learner"])["abs_diff"]
                  .agg(["mean", "std", "count"]).reset_index())
    return ConsistencyReport(pairs, aggregates)
