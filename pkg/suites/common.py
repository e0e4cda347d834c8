import logging
import random

from dataclasses import dataclass, field


logger = logging.getLogger(__name__)

DEFAULT_SEED = 1

DEFAULT_SAMPLES = 200

MAX_FAILURES = 10  # kept per group, the rest are only counted


@dataclass
class Group:
    name: str
    checked: int = 0
    passed: int = 0
    failures: list = field(default_factory=list)

    def check(self, ok, message="", *args):
        self.checked += 1
        if ok:
            self.passed += 1
        elif len(self.failures) < MAX_FAILURES:
            self.failures.append(message % args if args else message)
        return ok

    @property
    def ok(self):
        return self.checked == self.passed

    def to_json(self):
        return {"name": self.name, "passed": self.ok, "checked": self.checked, "failures": self.failures}


def get_params(params):
    """Fill in defaults for the keys every suite understands."""

    return {
        "seed": DEFAULT_SEED,
        "samples": DEFAULT_SAMPLES,
        "n": None,
        "max_n": None,
        **{k: v for k, v in (params or {}).items() if v is not None},
    }


def get_rng(params):
    return random.Random(params["seed"])


def finish(suite, groups):
    for g in groups:
        logger.info("%s/%s: %d of %d passed", suite, g.name, g.passed, g.checked)
    return [g.to_json() for g in groups]
