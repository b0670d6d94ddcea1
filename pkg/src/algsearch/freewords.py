"""Identity testing for words in the free group F_r and free abelian group Z^r.

Words are plain strings over a GenAlphabet; the capital letter is the
formal inverse of its lowercase partner.
"""

from __future__ import annotations

from collections import Counter

from .descriptions import GenAlphabet

_DEFAULT = GenAlphabet(2)


def free_reduce(w: str, alphabet: GenAlphabet = _DEFAULT) -> str:
    """Unique reduced form: adjacent inverse pairs cancelled until none
    remain.  Single left-to-right stack scan, linear time."""
    alphabet.check_word(w)
    stack: list[str] = []
    for ch in w:
        if stack and stack[-1] == ch.swapcase():
            stack.pop()
        else:
            stack.append(ch)
    return "".join(stack)


def is_identity_free(w: str, alphabet: GenAlphabet = _DEFAULT) -> bool:
    """True iff w defines the identity of the free group of rank r."""
    return not free_reduce(w, alphabet)


def is_identity_abelian(w: str, alphabet: GenAlphabet = _DEFAULT) -> bool:
    """True iff w defines the identity of the free abelian group of rank r,
    i.e. every generator occurs as often as its inverse."""
    alphabet.check_word(w)
    counts = Counter(w)
    return all(counts[ch] == counts[ch.swapcase()] for ch in w)
