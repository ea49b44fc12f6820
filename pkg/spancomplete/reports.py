"""Summarise verdicts, catalogues and sweeps as pandas tables."""

from collections.abc import Iterable

import pandas as pd

from .delta import MonotoneMap
from .squares import CatalogEntry
from .sset import ClassifierResult, ValidationReport

SWEEP_CHECKS = {
    "pushouts": ["has_pushout", "oracle"],
    "factorizations": ["cells_ok", "recomposes"],
    "concrete": ["pushout", "set_pushout_and_spine"],
    "acyclicity": ["graham", "chordal_and_spheres", "rip"],
    "directed_acyclicity": [
        "directed_graham",
        "directed_chordal_and_spheres",
        "directed_rip",
    ],
}
SWEEP_REQUIRED = {
    "pushouts": ["matches"],
    "factorizations": ["cells_ok", "recomposes"],
}
SWEEP_GROUPS = {
    "pushouts": "m",
    "factorizations": "kind",
    "concrete": "n",
    "acyclicity": "vertices",
    "directed_acyclicity": "vertices",
}


def _values(f: MonotoneMap) -> str:
    return ",".join(str(v) for v in f.values)


def classifier_table(results: Iterable[ClassifierResult]) -> pd.DataFrame:
    """Tabulate classifier verdicts.

    Parameters
    ----------
    results : iterable of ClassifierResult
        Verdicts, for instance from `classify`.

    Returns
    -------
    pandas.DataFrame
        One row per classifier with columns ``name``, ``holds``, ``dim``
        and ``witness`` (None when the property holds).

    """
    return pd.DataFrame(
        [
            {
                "name": r.name,
                "holds": r.holds,
                "dim": r.dim,
                "witness": r.witness,
            }
            for r in results
        ],
        columns=["name", "holds", "dim", "witness"],
    )


def catalog_table(entries: Iterable[CatalogEntry]) -> pd.DataFrame:
    """Tabulate a catalogue of squares.

    Parameters
    ----------
    entries : iterable of CatalogEntry
        Entries, for instance from `catalog`.

    Returns
    -------
    pandas.DataFrame
        One row per square: kind, parameters, the four objects and the
        images of ``f``, ``g``, ``h`` and ``k`` as comma separated text.

    """
    rows = []
    for entry in entries:
        square = entry.square
        rows.append(
            {
                "kind": str(entry.kind),
                "params": ";".join(
                    f"{k}={v}" for k, v in sorted(entry.params.items())
                ),
                "m": square.m,
                "p": square.p,
                "q": square.q,
                "n": square.n,
                "f": _values(square.f),
                "g": _values(square.g),
                "h": _values(square.h),
                "k": _values(square.k),
                "self_mirror": entry.self_mirror,
            }
        )
    columns = ["kind", "params", "m", "p", "q", "n", "f", "g", "h", "k"]
    return pd.DataFrame(rows, columns=[*columns, "self_mirror"])


def validation_summary(report: ValidationReport) -> pd.DataFrame:
    """Count failed simplicial identities by kind and dimension.

    Parameters
    ----------
    report : ValidationReport
        Output of `validate`.

    Returns
    -------
    pandas.DataFrame
        Columns ``kind``, ``n`` and ``violations``; empty when the
        report is clean.

    """
    frame = report.to_frame()
    if frame.empty:
        return pd.DataFrame(columns=["kind", "n", "violations"])
    return (
        frame.groupby(["kind", "n"])
        .size()
        .reset_index(name="violations")
    )


def disagreements(df_sweep: pd.DataFrame, checks: list[str]) -> pd.DataFrame:
    """Rows of a sweep where the given boolean columns differ.

    Parameters
    ----------
    df_sweep : pandas.DataFrame
        Output of one of the ``sweep_*`` functions.
    checks : list of str
        Boolean columns expected to agree.

    Returns
    -------
    pandas.DataFrame
        The disagreeing rows.

    """
    values = df_sweep[checks]
    return df_sweep[values.nunique(axis=1) > 1]


def summarise_sweep(
    df_sweep: pd.DataFrame,
    checks: list[str],
    group_by: str | None = None,
) -> pd.DataFrame:
    """Count the cases of a sweep and how often each check holds.

    Parameters
    ----------
    df_sweep : pandas.DataFrame
        Output of one of the ``sweep_*`` functions.
    checks : list of str
        Boolean columns to count; `SWEEP_CHECKS` lists the usual ones.
    group_by : str or None, optional
        Column to group by, e.g. ``vertices`` or ``n``. If None, the
        whole sweep forms one group.

    Returns
    -------
    pandas.DataFrame
        One row per group with ``cases``, a ``<check>_true`` count per
        check and ``disagreements``, the number of rows where the checks
        do not all agree.

    """
    frame = df_sweep.assign(
        disagree=df_sweep[checks].nunique(axis=1) > 1,
        group="all" if group_by is None else df_sweep[group_by],
    )
    agg_spec = {"cases": ("disagree", "size")}
    for check in checks:
        agg_spec[f"{check}_true"] = (check, "sum")
    agg_spec["disagreements"] = ("disagree", "sum")

    summary = frame.groupby("group").agg(**agg_spec).reset_index()
    if group_by is not None:
        summary = summary.rename(columns={"group": group_by})
    return summary
