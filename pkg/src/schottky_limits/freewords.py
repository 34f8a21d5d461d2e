"""Free-group words over {a, b}, the prefix-free family b^n a, and the
exhaustive bounded verifier for free generation of the doubled-word sequence.

String form uses the case convention: 'a'/'b' are the generators, 'A'/'B'
their inverses, and 'e' the empty word.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Optional, Tuple


class BadIndex(ValueError):
    pass


class NotReduced(ValueError):
    pass


class PrefixFreeViolated(ValueError):
    pass


Letter = Tuple[str, int]  # (generator, exponent +-1)


@dataclass(frozen=True)
class Word:
    letters: Tuple[Letter, ...] = ()

    @classmethod
    def from_string(cls, s: str) -> "Word":
        if s in ("", "e"):
            return cls()
        letters = []
        for ch in s:
            if ch in "ab":
                letters.append((ch, 1))
            elif ch in "AB":
                letters.append((ch.lower(), -1))
            else:
                raise ValueError(f"bad letter {ch!r}")
        return cls(tuple(letters))

    def to_string(self) -> str:
        if not self.letters:
            return "e"
        return "".join(g if e == 1 else g.upper() for g, e in self.letters)

    def __len__(self):
        return len(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        """Concatenation, without reduction."""
        return Word(self.letters + other.letters)

    def inverse(self) -> "Word":
        return Word(tuple((g, -e) for g, e in reversed(self.letters)))

    def is_reduced(self) -> bool:
        return all(
            not (x[0] == y[0] and x[1] == -y[1])
            for x, y in zip(self.letters, self.letters[1:])
        )

    def is_prefix_of(self, other: "Word") -> bool:
        n = len(self.letters)
        return len(other.letters) >= n and other.letters[:n] == self.letters

    def __repr__(self):
        return f"Word({self.to_string()!r})"


EMPTY = Word()


def reduce(w: Word) -> Word:
    """Unique freely reduced normal form, via a single stack pass."""
    stack = []
    for let in w.letters:
        if stack and stack[-1][0] == let[0] and stack[-1][1] == -let[1]:
            stack.pop()
        else:
            stack.append(let)
    return Word(tuple(stack))


def reverse(w: Word) -> Word:
    """Letters in reverse order, exponents unchanged (not the inverse)."""
    return Word(tuple(reversed(w.letters)))


def omega(n: int) -> Word:
    """The n-th word of the default prefix-free family: b^n a."""
    if n < 1:
        raise BadIndex(f"index must be >= 1, got {n}")
    return Word(tuple([("b", 1)] * n + [("a", 1)]))


@dataclass(frozen=True)
class WordFamily:
    """A candidate prefix-free family, given by an index rule and a bound."""

    rule: Callable[[int], Word] = omega
    max_index: int = 50

    def word(self, n: int) -> Word:
        if not 1 <= n <= self.max_index:
            raise BadIndex(f"index {n} outside 1..{self.max_index}")
        return self.rule(n)


DEFAULT_FAMILY = WordFamily()


def theta(n: int, fam: WordFamily = DEFAULT_FAMILY) -> Word:
    """w_1 r_1 ... w_n r_n where r_k is w_k written backwards, freely reduced."""
    if n < 1:
        raise BadIndex(f"index must be >= 1, got {n}")
    out = EMPTY
    for k in range(1, n + 1):
        wk = fam.word(k)
        out = out * wk * reverse(wk)
    return reduce(out)


def is_prefix_free(fam: WordFamily) -> bool:
    """Pairwise initial-segment scan over the family up to its bound."""
    words = [reduce(fam.word(n)) for n in range(1, fam.max_index + 1)]
    for i, j in itertools.combinations(range(len(words)), 2):
        if words[i].is_prefix_of(words[j]) or words[j].is_prefix_of(words[i]):
            return False
    return True


Syllable = Tuple[int, int]  # (family index, exponent +-1)


@dataclass(frozen=True)
class SymbolWord:
    """Word in the abstract doubled-word symbols, prior to expansion."""

    syllables: Tuple[Syllable, ...] = ()

    def is_reduced(self) -> bool:
        return all(
            not (x[0] == y[0] and x[1] == -y[1])
            for x, y in zip(self.syllables, self.syllables[1:])
        )

    def to_string(self) -> str:
        if not self.syllables:
            return "e"
        return ".".join(f"S{n}" if e == 1 else f"S{n}^-1" for n, e in self.syllables)


def doubled_word(n: int, fam: WordFamily) -> Word:
    """The block w_n r_n that a positive syllable stands for."""
    wn = fam.word(n)
    return wn * reverse(wn)


def expand(sw: SymbolWord, fam: WordFamily) -> Word:
    """Substitute each syllable by its {a,b}-block and freely reduce."""
    if not sw.is_reduced():
        raise NotReduced("symbol word has adjacent cancelling syllables")
    out = EMPTY
    for n, e in sw.syllables:
        block = doubled_word(n, fam)
        out = out * (block if e == 1 else block.inverse())
    return reduce(out)


def _symbol_words(max_index: int, max_syllables: int):
    """All nonempty reduced symbol words, lexicographic by (length, sequence)."""
    alphabet = [(n, e) for n in range(1, max_index + 1) for e in (1, -1)]
    alphabet.sort()

    def extend(prefix):
        for s in alphabet:
            if prefix and prefix[-1][0] == s[0] and prefix[-1][1] == -s[1]:
                continue
            yield prefix + [s]

    level = [[]]
    for _ in range(max_syllables):
        nxt = []
        for p in level:
            for q in extend(p):
                nxt.append(q)
                yield SymbolWord(tuple(q))
        level = nxt


def _outer_letters_survive(left: Word, right: Word) -> bool:
    """Check the pair reduction left*right keeps its first and last letters."""
    cat = left * right
    red = reduce(cat)
    return (
        len(red) >= 2
        and red.letters[0] == cat.letters[0]
        and red.letters[-1] == cat.letters[-1]
    )


@dataclass
class VerificationReport:
    """Outcome of the bounded free-generation check.

    This is bounded verification over the stated ranges, not a proof for the
    infinite family.
    """

    max_index: int
    max_syllables: int
    words_checked: int = 0
    pairs_checked: int = 0
    all_nonempty: bool = True
    outer_letters_ok: bool = True
    counterexample: Optional[str] = None

    @property
    def verified(self) -> bool:
        return self.all_nonempty and self.outer_letters_ok


def verify_free_generation(
    fam: WordFamily, max_syllables: int
) -> VerificationReport:
    """Exhaustively check that every nonempty reduced symbol word expands to a
    nonempty reduced {a,b}-word, and that every adjacent-pair reduction keeps
    its outermost letters.

    The adjacent pairs are (r_{n_i}, r_{n_{i+1}}^-1) at a +- sign change and
    (w_{n_i}^-1, w_{n_{i+1}}) at a -+ sign change; equal adjacent signs need
    no reduction since the blocks contain only positive letters.
    """
    if not is_prefix_free(fam):
        raise PrefixFreeViolated(
            f"family is not prefix-free up to index {fam.max_index}"
        )
    report = VerificationReport(fam.max_index, max_syllables)
    for sw in _symbol_words(fam.max_index, max_syllables):
        report.words_checked += 1
        if len(expand(sw, fam)) == 0:
            report.all_nonempty = False
            if report.counterexample is None:
                report.counterexample = sw.to_string()
        for (n1, e1), (n2, e2) in zip(sw.syllables, sw.syllables[1:]):
            if e1 == 1 and e2 == -1:
                left = reverse(fam.word(n1))
                right = reverse(fam.word(n2)).inverse()
            elif e1 == -1 and e2 == 1:
                left = fam.word(n1).inverse()
                right = fam.word(n2)
            else:
                continue
            report.pairs_checked += 1
            if not _outer_letters_survive(left, right):
                report.outer_letters_ok = False
                if report.counterexample is None:
                    report.counterexample = sw.to_string()
    return report
