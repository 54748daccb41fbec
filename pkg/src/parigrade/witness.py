# -*- coding: utf-8 -*-
"""Succinct witnesses and the rules that update them.

A witness of length L is stored leftmost entry first, but the rules below speak
about entry indices the way the witness is read: index 0 is the rightmost entry
and index L-1 the leftmost one.
"""

import itertools
from math import comb

from .errors import ValOfWon, XOdd
from .models.witness import CertifiedWitness, Ordering, UpdateMode, Witness, \
    WON, colour_key

OVERFLOW = 'overflow'
LOCAL = 'local'
STALE = 'stale'
IDENTITY = 'identity'
WON_RULE = 'won'

DEFAULT_MODE = UpdateMode()


def cmp_colour(left, right, table):
    """Compare two entries under the colour order.

    :param left: colour or None for blank
    :param right: colour or None for blank
    :param table: ColourTable both entries belong to
    :returns: Ordering
    :raises: UnknownColour
    """
    return Ordering.of(table.rank(left), table.rank(right))


def cmp_witness(left, right):
    """Lexicographic comparison from the leftmost entry; Won is above everything

    :raises: LengthMismatch
    """
    return Ordering.of(left, right)


def val(witness, table):
    """Sum of 2^i over the indices i holding an even colour

    :raises: ValOfWon
    """
    if witness.is_won:
        raise ValOfWon()
    length = len(witness.ranks)
    return sum(1 << (length - 1 - position)
               for position, rank in enumerate(witness.ranks) if table.even[rank])


def is_shape_valid(ranks, table):
    """Whether non-blank entries never increase from left to right"""
    bound = None
    for rank in ranks:
        value = table.values[rank]
        if value is None:
            continue
        if bound is not None and value > bound:
            return False
        bound = value
    return True


def _entries(witness, table):
    """Natural colours indexed from the rightmost entry"""
    return [table.values[rank] for rank in reversed(witness.ranks)]


def _encode(entries, table):
    return Witness(table.rank(entry) for entry in reversed(entries))


def _shape(entries, colour):
    """Index of the highest entry below colour (-1 if none) and the number of
    trailing even entries"""
    highest_below = -1
    for index in range(len(entries) - 1, -1, -1):
        if entries[index] is not None and entries[index] < colour:
            highest_below = index
            break
    trailing_even = 0
    while trailing_even < len(entries) and entries[trailing_even] is not None \
            and entries[trailing_even] % 2 == 0:
        trailing_even += 1
    return highest_below, trailing_even


def rule_candidates(witness, colour, mode=DEFAULT_MODE, table=None):
    """Every witness one of the three update rules permits after colour.

    The overflow rule is also tried one position past the leftmost entry; there it
    yields Won, since the chain it would write is longer than any witness can count.

    :param witness: non-Won Witness
    :param colour: colour of the vertex being processed
    :param mode: UpdateMode
    :param table: ColourTable of the game
    :returns: list of (rule, index, Witness); index is None for the stale rule
    """
    entries = _entries(witness, table)
    result = []
    for rule, index in _candidates(entries, len(entries), colour, mode):
        if rule == WON_RULE:
            result.append((rule, index, WON))
            continue
        written = _apply(entries, rule, index, colour)
        if rule != STALE:
            written = _compress(written, index, colour, mode, table)
        result.append((rule, index, _encode(written, table)))
    return result


def _candidates(entries, length, colour, mode):
    highest_below, trailing_even = _shape(entries, colour)
    candidates = []
    if mode.allows_overflow(colour):
        for index in range(max(highest_below, 0), min(trailing_even, length - 1) + 1):
            candidates.append((OVERFLOW, index))
        if trailing_even == length and colour % 2 == 0:
            candidates.append((WON_RULE, length))
    if highest_below >= 0:
        candidates.append((LOCAL, highest_below))
    else:
        candidates.append((STALE, None))
    return candidates


def _apply(entries, rule, index, colour):
    if rule == STALE:
        return list(entries)
    written = list(entries)
    written[index] = colour
    for lower in range(index):
        written[lower] = None
    return written


def _compress(entries, index, colour, mode, table):
    """Rewrite a freshly written entry the way colour compression requires"""
    if not mode.compression or index is None:
        return entries
    if colour == table.o_max or (index == 0 and colour % 2):
        entries = list(entries)
        entries[index] = None
    return entries


def _raw_update(witness, colour, mode, table):
    """Best rule application by full enumeration.

    :returns: (rule, index, Witness)
    """
    if mode.compression and table.o_min is not None and colour == table.o_min:
        return IDENTITY, None, witness
    entries = _entries(witness, table)
    best = None
    for rule, index in _candidates(entries, len(entries), colour, mode):
        if rule == WON_RULE:
            return WON_RULE, index, WON
        written = _apply(entries, rule, index, colour)
        if rule != STALE:
            written = _compress(written, index, colour, mode, table)
        key = tuple(colour_key(entry) for entry in reversed(written))
        if best is None or key > best[0]:
            best = (key, rule, index, written)
    _, rule, index, written = best
    return rule, index, _encode(written, table)


def ru(witness, colour, mode=DEFAULT_MODE, table=None):
    """Raw update: the best witness any of the three update rules allows after a vertex
    of the given colour. Won stays Won.

    :param witness: Witness
    :param colour: colour of the processed vertex
    :param mode: UpdateMode
    :param table: ColourTable of the game
    :raises: UnknownColour
    """
    if witness.is_won:
        return WON
    return _raw_update(witness, colour, mode, table)[2]


def ru_leftmost(witness, colour, mode=DEFAULT_MODE, table=None):
    """Same result as ``ru`` without building every candidate.

    Writes at the highest index where the colour beats the current entry; failing
    that keeps the witness when nothing is below the colour, otherwise writes at
    the highest entry below the colour. Under compression an odd colour that could
    only be written rightmost, where it would be blanked, leaves the witness alone.
    """
    if witness.is_won:
        return WON
    if mode.compression and table.o_min is not None and colour == table.o_min:
        return witness
    entries = _entries(witness, table)
    length = len(entries)
    highest_below, trailing_even = _shape(entries, colour)
    overflow = mode.allows_overflow(colour)
    if overflow and trailing_even == length and colour % 2 == 0:
        return WON

    positions = set()
    if overflow:
        positions.update(range(max(highest_below, 0), min(trailing_even, length - 1) + 1))
    if highest_below >= 0:
        positions.add(highest_below)

    key = colour_key(colour)
    chosen = None
    for index in sorted(positions, reverse=True):
        if key > colour_key(entries[index]):
            chosen = index
            break
    if highest_below < 0 and (chosen is None or (
            chosen == 0 and mode.compression and colour % 2)):
        return witness
    if chosen is None:
        chosen = highest_below
    written = _compress(_apply(entries, OVERFLOW, chosen, colour), chosen, colour, mode, table)
    return _encode(written, table)


def up(witness, colour, even_count, mode=DEFAULT_MODE, table=None):
    """Raw update capped at Won once the value exceeds the even vertex count"""
    if witness.is_won:
        return WON
    updated = ru_leftmost(witness, colour, mode, table)
    if updated.is_won or val(updated, table) > even_count:
        return WON
    return updated


def _bump(witness, table, index):
    """Least witness that agrees above index, is larger at index and blank below"""
    ranks = witness.ranks
    position = len(ranks) - 1 - index
    bound = _bound(ranks, position, table)
    for rank in range(ranks[position] + 1, len(table.values)):
        if bound is None or table.values[rank] <= bound:
            return Witness(ranks[:position] + (rank,) + (0,) * index)
    return None


def _bound(ranks, position, table):
    """Nearest non-blank colour left of position, None when there is none"""
    for rank in reversed(ranks[:position]):
        if rank:
            return table.values[rank]
    return None


def min_blank_tail(witness, table):
    """Least witness at or above witness whose rightmost entry is blank.

    :returns: Witness, or None when no such witness exists
    """
    if witness.is_won:
        return None
    if witness.ranks[-1] == 0:
        return witness
    for index in range(1, len(witness)):
        bumped = _bump(witness, table, index)
        if bumped is not None:
            return bumped
    return None


def _least_raises(ranks, position, colour, table):
    """Least raise of the entry at position for each parity and side of colour"""
    bound = _bound(ranks, position, table)
    least = {}
    for rank in range(ranks[position] + 1, len(table.values)):
        value = table.values[rank]
        if bound is not None and value > bound:
            continue
        least.setdefault((value % 2, (value > colour) - (value < colour)), rank)
    return least.values()


def _raised_starts(witness, colour, table):
    """Witnesses above witness among which one minimises the capped update.

    Each raises one entry to the least colour of its kind and fills the entries
    to its right with blanks, or with the least even colour after an even raise.
    """
    ranks = witness.ranks
    length = len(ranks)
    even_fill = None if table.least_even is None else table.rank(table.least_even)
    for position in range(length):
        index = length - 1 - position
        for rank in _least_raises(ranks, position, colour, table):
            head = ranks[:position] + (rank,)
            yield Witness(head + (0,) * index)
            if index and even_fill is not None and table.even[rank]:
                yield Witness(head + (even_fill,) * index)


def au(witness, colour, even_count, mode=DEFAULT_MODE, table=None):
    """Antagonistic update: the least capped update over every witness at or
    above the given one.

    A raised witness only matters through the parity of the raised entry, its side
    of the colour and whether the entries to its right can extend a run of even
    colours, so the least raise of each kind stands in for all the others.
    """
    if witness.is_won:
        return WON
    best = up(witness, colour, even_count, mode, table)
    if mode.compression and table.o_min is not None and colour == table.o_min:
        return best
    for start in _raised_starts(witness, colour, table):
        candidate = up(start, colour, even_count, mode, table)
        if candidate < best:
            best = candidate
    return best


def downarrow(witness, x, table):
    """Truncate at an even colour x: the highest entry below x becomes x-1 and
    everything to its right is blanked.

    :raises: XOdd
    :raises: UnknownColour when x-1 is not representable
    """
    if x % 2:
        raise XOdd(x)
    if witness.is_won:
        return witness
    ranks = witness.ranks
    for position, rank in enumerate(ranks):
        value = table.values[rank]
        if value is not None and value < x:
            return Witness(ranks[:position] + (table.rank(x - 1),)
                           + (0,) * (len(ranks) - position - 1))
    return witness


def count_W(r, l):  # noqa: N802
    """Upper bound on the number of witnesses, Won included, for r colours and
    length l. Exact for shape-valid witnesses.
    """
    if r < 1 or l < 1:
        raise ValueError('r and l must be positive')
    return 1 + sum(comb(l, i) * comb(i + r - 1, r - 1) for i in range(l + 1))


def iter_witnesses(table, length):
    """Every shape-valid witness of the given length, Won excluded, in ascending order"""
    for ranks in itertools.product(range(len(table)), repeat=length):
        if is_shape_valid(ranks, table):
            yield Witness(ranks)


def evaluate_play(colours, length, even_count, mode=DEFAULT_MODE, table=None,
                  antagonistic=False, backward=False):
    """Evaluate a finite play from the bottom witness.

    :param colours: colours of the play in play order
    :param length: witness length
    :param even_count: threshold beyond which the witness becomes Won
    :param antagonistic: use the antagonistic update instead of the basic one
    :param backward: process the play from its last position
    :returns: final Witness
    """
    update = au if antagonistic else up
    witness = Witness.bottom(length)
    for colour in (reversed(colours) if backward else colours):
        witness = update(witness, colour, even_count, mode, table)
    return witness


def certified_forward_update(certified, colour, mode=UpdateMode(compression=False)):
    """Apply ``ru`` to a certified witness and rebuild its position lists.

    :param certified: CertifiedWitness of the play so far
    :param colour: colour of the appended vertex
    :returns: CertifiedWitness of the extended play
    :raises: CertificationBroken
    """
    table = certified.table
    position = len(certified.play)
    play = certified.play + (colour,)
    if certified.witness.is_won:
        result = CertifiedWitness(WON, table, play, won_chain=certified.won_chain)
        result.check()
        return result

    rule, index, witness = _raw_update(certified.witness, colour, mode, table)
    chains = dict(certified.chains)
    won_chain = None
    if rule == WON_RULE:
        won_chain = [p for lower in range(index - 1, -1, -1) for p in chains[lower]]
        won_chain.append(position)
        chains = {}
    elif rule == OVERFLOW:
        chain = [p for lower in range(index - 1, -1, -1) for p in chains[lower]]
        chain.append(position)
        chains = {i: c for i, c in chains.items() if i > index}
        chains[index] = chain
    elif rule == LOCAL:
        chain = list(chains[index][:-1]) + [position]
        chains = {i: c for i, c in chains.items() if i > index}
        chains[index] = chain

    if not witness.is_won and index is not None and witness.entry(index) == 0:
        chains.pop(index, None)
    result = CertifiedWitness(witness, table, play, chains, won_chain)
    result.check()
    return result
