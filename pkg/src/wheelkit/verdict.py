from dataclasses import dataclass


@dataclass(frozen=True)
class Violation:
    tag: str
    detail: str

    def __str__(self):
        return f"{self.tag} {self.detail}"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a certificate check; truthy iff nothing was violated."""

    violations: tuple = ()

    @property
    def ok(self):
        return not self.violations

    @property
    def tags(self):
        return sorted({v.tag for v in self.violations})

    def __bool__(self):
        return self.ok

    @classmethod
    def of(cls, violations):
        return cls(tuple(violations))
