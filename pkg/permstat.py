"""permutations, signed permutations, inversion sequences and their statistics"""

from dataclasses import dataclass
from math import factorial
from typing import Iterator, Sequence

from typing_extensions import Self

from exactpoly import CapExceededError

Word = tuple[int, ...]


@dataclass(frozen=True)
class Permutation:
    """one-line notation of a bijection on 1..n"""

    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        if not word or sorted(word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, n: int) -> Self:
        """12...n"""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Self:
        """parse "3142" or "10,3,1,..." """
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        """size"""
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return Permutation(compose(self.word, other.word))

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class SignedPermutation:
    """signed one-line notation; magnitudes form a permutation of 1..n"""

    word: Word

    def __post_init__(self):
        word = tuple(self.word)
        if not word or sorted(abs(v) for v in word) != list(range(1, len(word) + 1)):
            raise ValueError(f"{word} is not a signed permutation of 1..{len(word)}")
        object.__setattr__(self, "word", word)

    @classmethod
    def identity(cls, n: int) -> Self:
        """12...n"""
        return cls(tuple(range(1, n + 1)))

    @classmethod
    def parse(cls, text: str) -> Self:
        """parse "-2,1" """
        return cls(parse_word(text))

    @property
    def n(self) -> int:
        """size"""
        return len(self.word)

    def __len__(self) -> int:
        return len(self.word)

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        return SignedPermutation(compose_signed(self.word, other.word))

    def __str__(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class InversionSequence:
    """e_1..e_n with 0 <= e_i <= i-1"""

    entries: Word

    def __post_init__(self):
        entries = tuple(self.entries)
        for i, e in enumerate(entries, start=1):
            if not 0 <= e <= i - 1:
                raise ValueError(f"e_{i} = {e} not in 0..{i - 1}")
        object.__setattr__(self, "entries", entries)

    def __len__(self) -> int:
        return len(self.entries)


def parse_word(text: str) -> Word:
    """
    comma-free digits for n <= 9 with no signs, comma separated otherwise;
    a lone signed integer is a word of length one.

    ex: "3142" -> (3, 1, 4, 2), "-2,1" -> (-2, 1), "-1" -> (-1,)
    """
    text = text.strip()
    if "," in text:
        return tuple(int(v) for v in text.split(","))
    if text.startswith("-") and text[1:].isdigit():
        return (int(text),)
    if not text.isdigit():
        raise ValueError(f"'{text}' must be digits or comma separated integers")
    return tuple(int(c) for c in text)


def format_word(word: Sequence[int]) -> str:
    """inverse of parse_word"""
    if len(word) <= 9 and all(0 < v <= 9 for v in word):
        return "".join(str(v) for v in word)
    return ",".join(str(v) for v in word)


def compose(p: Sequence[int], q: Sequence[int]) -> Word:
    """(pq)_i = p_{q_i}"""
    return tuple(p[v - 1] for v in q)


def compose_signed(p: Sequence[int], q: Sequence[int]) -> Word:
    """(pq)(i) = p(q(i)) with p(-i) = -p(i)"""
    return tuple(p[v - 1] if v > 0 else -p[-v - 1] for v in q)


def _inverse(word: Sequence[int]) -> Word:
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[v - 1] = i
    return tuple(inv)


def _inverse_signed(word: Sequence[int]) -> Word:
    inv = [0] * len(word)
    for i, v in enumerate(word, start=1):
        inv[abs(v) - 1] = i if v > 0 else -i
    return tuple(inv)


def _des(word: Sequence[int]) -> int:
    return sum(1 for a, b in zip(word, word[1:]) if a > b)


def _cdes(word: Sequence[int]) -> int:
    return _des(word) + (1 if word[-1] > word[0] else 0)


def _des_b(word: Sequence[int]) -> int:
    # sigma_0 = 0, positions 0..n-1
    return (1 if word[0] < 0 else 0) + _des(word)


def des(pi: Permutation) -> int:
    """number of i with pi_i > pi_{i+1}"""
    return _des(pi.word)


def inverse(pi: Permutation) -> Permutation:
    """group inverse"""
    return Permutation(_inverse(pi.word))


def ides(pi: Permutation) -> int:
    """des of the inverse"""
    return _des(_inverse(pi.word))


def asc(pi: Permutation) -> int:
    """(n-1) - des"""
    return pi.n - 1 - _des(pi.word)


def iasc(pi: Permutation) -> int:
    """asc of the inverse"""
    return pi.n - 1 - ides(pi)


def cdes(pi: Permutation) -> int:
    """des plus one if the last entry exceeds the first"""
    return _cdes(pi.word)


def cyclic_rotate(pi: Permutation) -> Permutation:
    """pi composed with 23...n1, i.e. pi_2 ... pi_n pi_1"""
    if pi.n < 2:
        raise ValueError("cyclic rotation needs n >= 2")
    return Permutation(pi.word[1:] + pi.word[:1])


def reversal(n: int) -> Permutation:
    """n(n-1)...1"""
    return Permutation(tuple(range(n, 0, -1)))


def des_b(sigma: SignedPermutation) -> int:
    """type B descents with sigma_0 = 0, scanning positions 0..n-1"""
    return _des_b(sigma.word)


def inverse_b(sigma: SignedPermutation) -> SignedPermutation:
    """|sigma_i| -> sign(sigma_i) * i"""
    return SignedPermutation(_inverse_signed(sigma.word))


def _inversion_entries(word: Sequence[int]) -> Word:
    return tuple(
        sum(1 for i in range(j) if word[i] > word[j]) for j in range(len(word))
    )


def to_inversion_sequence(pi: Permutation) -> InversionSequence:
    """e_j = |{i < j : pi_i > pi_j}|"""
    return InversionSequence(_inversion_entries(pi.word))


def from_inversion_sequence(e: InversionSequence) -> Permutation:
    """inverse of to_inversion_sequence"""
    # build right to left: pi_j is the (e_j+1)-th largest of the values still free
    n = len(e)
    free = list(range(1, n + 1))
    word = [0] * n
    for j in range(n - 1, -1, -1):
        # among pi_1..pi_j, exactly e_j exceed pi_j
        word[j] = free.pop(len(free) - 1 - e.entries[j])
    return Permutation(tuple(word))


def _asc_i(entries: Sequence[int]) -> int:
    return sum(1 for a, b in zip(entries, entries[1:]) if a < b)


def asc_i(e: InversionSequence) -> int:
    """number of i with e_i < e_{i+1}"""
    return _asc_i(e.entries)


def dst(e: InversionSequence) -> int:
    """number of distinct entries"""
    return len(set(e.entries))


def rank_permutation(word: Sequence[int]) -> int:
    """lexicographic rank in [0, n!)"""
    n = len(word)
    free = list(range(1, n + 1))
    rank = 0
    for i, v in enumerate(word):
        pos = free.index(v)
        rank += pos * factorial(n - 1 - i)
        free.pop(pos)
    return rank


def unrank_permutation(n: int, rank: int) -> Word:
    """lexicographic unranking by the factorial number system"""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} not in [0, {n}!)")
    free = list(range(1, n + 1))
    word = []
    for i in range(n - 1, -1, -1):
        digit, rank = divmod(rank, factorial(i))
        word.append(free.pop(digit))
    return tuple(word)


def unrank_signed(n: int, rank: int) -> Word:
    """rank = permutation_rank * 2**n + sign_mask; bit k negates entry k+1"""
    perm_rank, mask = divmod(rank, 1 << n)
    word = unrank_permutation(n, perm_rank)
    return tuple(-v if mask >> k & 1 else v for k, v in enumerate(word))


def unrank_inversion_sequence(n: int, rank: int) -> Word:
    """mixed radix, e_n least significant"""
    if not 0 <= rank < factorial(n):
        raise ValueError(f"rank {rank} not in [0, {n}!)")
    entries = [0] * n
    for i in range(n, 0, -1):
        rank, entries[i - 1] = divmod(rank, i)
    return tuple(entries)


def next_permutation(word: list[int]) -> bool:
    """advance word in place to its lexicographic successor; False at the end"""
    i = len(word) - 2
    while i >= 0 and word[i] > word[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(word) - 1
    while word[j] < word[i]:
        j -= 1
    word[i], word[j] = word[j], word[i]
    word[i + 1 :] = reversed(word[i + 1 :])
    return True


def _check_n(n: int, cap: int | None):
    if n < 1 or (cap is not None and n > cap):
        raise CapExceededError(f"n = {n} not in 1..{cap}")


def iter_sn_words(n: int, lo: int = 0, hi: int | None = None) -> Iterator[Word]:
    """words of ranks lo..hi-1 in lexicographic order"""
    hi = factorial(n) if hi is None else hi
    if lo >= hi:
        return
    word = list(unrank_permutation(n, lo))
    for _ in range(hi - lo):
        yield tuple(word)
        next_permutation(word)


def iter_bn_words(n: int, lo: int = 0, hi: int | None = None) -> Iterator[Word]:
    """signed words of ranks lo..hi-1 (see unrank_signed)"""
    size = 1 << n
    hi = factorial(n) * size if hi is None else hi
    if lo >= hi:
        return
    perm_rank, mask = divmod(lo, size)
    base = list(unrank_permutation(n, perm_rank))
    for _ in range(hi - lo):
        yield tuple(-v if mask >> k & 1 else v for k, v in enumerate(base))
        mask += 1
        if mask == size:
            mask = 0
            next_permutation(base)


def iter_in_entries(n: int, lo: int = 0, hi: int | None = None) -> Iterator[Word]:
    """inversion sequences of ranks lo..hi-1 (see unrank_inversion_sequence)"""
    hi = factorial(n) if hi is None else hi
    if lo >= hi:
        return
    entries = list(unrank_inversion_sequence(n, lo))
    for _ in range(hi - lo):
        yield tuple(entries)
        # odometer increment, position i has radix i
        k = n - 1
        while k >= 0:
            entries[k] += 1
            if entries[k] <= k:
                break
            entries[k] = 0
            k -= 1


def enumerate_sn(
    n: int, lo: int = 0, hi: int | None = None, cap: int | None = None
) -> Iterator[Permutation]:
    """every permutation of 1..n (or the chunk [lo, hi)) exactly once"""
    _check_n(n, cap)
    for word in iter_sn_words(n, lo, hi):
        yield Permutation(word)


def enumerate_bn(
    n: int, lo: int = 0, hi: int | None = None, cap: int | None = None
) -> Iterator[SignedPermutation]:
    """every signed permutation (or the chunk [lo, hi)) exactly once"""
    _check_n(n, cap)
    for word in iter_bn_words(n, lo, hi):
        yield SignedPermutation(word)


def enumerate_in(
    n: int, lo: int = 0, hi: int | None = None, cap: int | None = None
) -> Iterator[InversionSequence]:
    """every inversion sequence of length n (or the chunk [lo, hi)) exactly once"""
    _check_n(n, cap)
    for entries in iter_in_entries(n, lo, hi):
        yield InversionSequence(entries)


def size_sn(n: int) -> int:
    """n!"""
    return factorial(n)


def size_bn(n: int) -> int:
    """2**n * n!"""
    return factorial(n) << n
