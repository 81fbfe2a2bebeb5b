import logging
from pathlib import Path
from typing import Iterable, List, Union

import pandas as pd

from ..core.errors import ArgumentError
from ..eval import consistency_report, roc_from_cost_sweep
from ..storage import RecordLog, read_records
from .runner import COLUMNS, ResultRecord

logger = logging.getLogger(__name__)

GROUP = ["dataset", "algorithm", "mode", "learner"]


def records_frame(records: Iterable[Union[ResultRecord, dict]]) -> pd.DataFrame:
    rows = [r.to_dict() if isinstance(r, ResultRecord) else r for r in records]
    if not rows:
        raise ArgumentError("No records to report")
    frame = pd.DataFrame(rows)
    missing = set(COLUMNS) - set(frame.columns)
    if missing:
        raise ArgumentError(f"Records lack columns {sorted(missing)}")
    frame = frame[COLUMNS].copy()
    frame["auc"] = pd.to_numeric(frame["auc"])
    return frame


def load_records(paths: Iterable[Union[str, Path]]) -> pd.DataFrame:
    frames = []
    for path in map(Path, paths):
        if path.suffix == ".jsonl":
            frames.append(records_frame(read_records(str(path))))
        else:
            frames.append(records_frame(pd.read_csv(path).to_dict("records")))
    return pd.concat(frames, ignore_index=True)


def _sweep_auc(points: pd.DataFrame) -> float:
    return roc_from_cost_sweep(zip(points["fpr"], points["tpr"])).auc


def auc_summary(frame: pd.DataFrame) -> pd.DataFrame:
    """
    One row per (dataset, algorithm, mode, learner, seed).

    sweep_auc is the area under the cost-sweep ROC built from fold-averaged
    operating points; score_auc is the mean per-cell score AUC.
    """
    keys = GROUP + ["seed"]
    per_point = (frame.groupby(keys + ["cost_point_index"], sort=True)[["fpr", "tpr"]]
                 .mean().reset_index())
    sweep = pd.DataFrame(
        [dict(zip(keys, key), sweep_auc=_sweep_auc(points)) for key, points in per_point.groupby(keys, sort=True)],
        columns=keys + ["sweep_auc"])
    cells = (frame.groupby(keys, sort=True)
             .agg(score_auc=("auc", "mean"), violations=("violations", "sum"))
             .reset_index())
    return sweep.merge(cells, on=keys)[keys + ["sweep_auc", "score_auc", "violations"]]


def roc_tables(frame: pd.DataFrame):
    """(algorithm, mode, learner) -> operating points averaged over folds and seeds."""
    averaged = (frame.groupby(GROUP + ["cost_point_index"], sort=True)
                .agg(c_pos=("c_pos", "first"), c_neg=("c_neg", "first"), c_rate=("c_rate", "first"),
                     fpr=("fpr", "mean"), tpr=("tpr", "mean"))
                .reset_index())
    for (algorithm, mode, learner), table in averaged.groupby(["algorithm", "mode", "learner"], sort=True):
        yield (algorithm, mode, learner), table.drop(columns=["algorithm", "mode", "learner"])


def _plain(value):
    if hasattr(value, "item"):
        value = value.item()
    if isinstance(value, float) and value != value:
        return None
    return value


def _json_rows(frame: pd.DataFrame) -> List[dict]:
    return [{col: _plain(v) for col, v in row.items()} for row in frame.to_dict("records")]


def emit_report(records, output: Union[str, Path], fmt: str = "csv") -> List[Path]:
    """Write records plus ROC, AUC summary and (when paired) consistency tables under `output`."""
    frame = records if isinstance(records, pd.DataFrame) else records_frame(records)
    output = Path(output)
    output.mkdir(parents=True, exist_ok=True)
    written = []

    if fmt == "jsonl":
        path = output / "records.jsonl"
        with RecordLog(str(path), truncate=True) as log:
            log.extend(_json_rows(frame))
    elif fmt == "csv":
        path = output / "records.csv"
        frame.to_csv(path, index=False)
    else:
        raise ArgumentError(f"Unknown report format {fmt!r}")
    written.append(path)

    for (algorithm, mode, learner), table in roc_tables(frame):
        path = output / f"roc_{algorithm}_{mode}_{learner}.csv"
        table.to_csv(path, index=False)
        written.append(path)

    summary = auc_summary(frame)
    path = output / "auc_summary.csv"
    summary.to_csv(path, index=False)
    written.append(path)

    paired = summary[summary["mode"].isin(["batch", "online"])].rename(columns={"sweep_auc": "auc"})
    if {"batch", "online"} <= set(paired["mode"]):
        try:
            report = consistency_report(paired)
        except ArgumentError as e:
            logger.warning("Skipping consistency table: %s", e)
        else:
            path = output / "consistency.csv"
            report.pairs.to_csv(path, index=False)
            written.append(path)
            logger.info("Mean |AUC(batch) - AUC(online)| = %.4f over %d pairs",
                        report.mean_abs_diff, len(report.pairs))
    return written
