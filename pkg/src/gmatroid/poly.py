"""Small exact polynomial types: univariate in t, bivariate Tutte in (x, y)."""


class GPolynomial:
    """Integer polynomial in t, stored densely by ascending power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @classmethod
    def from_dict(cls, terms):
        if not terms:
            return cls()
        top = max(terms)
        return cls([terms.get(i, 0) for i in range(top + 1)])

    @classmethod
    def t_power(cls, k):
        return cls([0] * k + [1])

    def __getitem__(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def terms(self):
        return {i: c for i, c in enumerate(self.coeffs) if c}

    def __eq__(self, other):
        if isinstance(other, GPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return GPolynomial([self[i] + other[i] for i in range(n)])

    def __sub__(self, other):
        n = max(len(self.coeffs), len(other.coeffs))
        return GPolynomial([self[i] - other[i] for i in range(n)])

    def __mul__(self, other):
        if not self.coeffs or not other.coeffs:
            return GPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return GPolynomial(out)

    def __pow__(self, k):
        out = GPolynomial([1])
        for _ in range(k):
            out = out * self
        return out

    def divide_by_t(self):
        if self[0] != 0:
            raise ArithmeticError(f"{self} is not divisible by t")
        return GPolynomial(self.coeffs[1:])

    def __call__(self, value):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * value + c
        return acc

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
            if mono and abs(c) == 1:
                coef = "-" if c < 0 else ""
            else:
                coef = str(c)
            parts.append(coef + mono)
        return " + ".join(parts).replace("+ -", "- ")


class TuttePolynomial:
    """Bivariate integer polynomial in (x, y) as a dict {(i, j): coefficient}."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=None):
        self.coeffs = {k: v for k, v in (coeffs or {}).items() if v}

    def __eq__(self, other):
        return isinstance(other, TuttePolynomial) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __add__(self, other):
        out = dict(self.coeffs)
        for k, v in other.coeffs.items():
            out[k] = out.get(k, 0) + v
        return TuttePolynomial(out)

    def shift(self, i, j):
        """Multiply by x^i y^j."""
        return TuttePolynomial({(a + i, b + j): v for (a, b), v in self.coeffs.items()})

    def __getitem__(self, key):
        return self.coeffs.get(key, 0)

    def __call__(self, x, y):
        return sum(v * x ** a * y ** b for (a, b), v in self.coeffs.items())

    def swap(self):
        return TuttePolynomial({(b, a): v for (a, b), v in self.coeffs.items()})

    def __repr__(self):
        parts = []
        for (a, b), v in sorted(self.coeffs.items(), reverse=True):
            mono = "".join(s for s in (
                "" if a == 0 else ("x" if a == 1 else f"x^{a}"),
                "" if b == 0 else ("y" if b == 1 else f"y^{b}"),
            ))
            parts.append((str(v) if v != 1 or not mono else "") + mono)
        return " + ".join(parts) or "0"
