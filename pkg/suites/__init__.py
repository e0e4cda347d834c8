from matroids.errors import InvalidInputError
from suites import (
    cell_correspondence,
    diamond,
    euler_shadow,
    flags_of_flats,
    greedy_oracle,
    mobius_partition,
    mst_oracle,
    round_trip,
    ultrametric_fan,
)


ALL = "all"

# command-line names kept alongside the module names
ALIASES = {
    "theorem-4.5": ultrametric_fan.NAME,
}

SUITES = {
    module.NAME: module
    for module in (
        greedy_oracle,
        mobius_partition,
        ultrametric_fan,
        euler_shadow,
        flags_of_flats,
        diamond,
        round_trip,
        cell_correspondence,
        mst_oracle,
    )
}


def get_names():
    return list(SUITES) + list(ALIASES) + [ALL]


def run_suites(name, params=None):
    """Run one suite, or every suite for "all"; the report is plain JSON data."""

    name = ALIASES.get(name, name)
    if name != ALL and name not in SUITES:
        raise InvalidInputError("unknown suite {!r}, expected one of {}".format(name, ", ".join(get_names())))
    names = list(SUITES) if name == ALL else [name]
    reports = []
    for suite in names:
        groups = SUITES[suite].run_suite(params)
        reports.append({"suite": suite, "passed": all(g["passed"] for g in groups), "groups": groups})
    return {"passed": all(r["passed"] for r in reports), "suites": reports}
