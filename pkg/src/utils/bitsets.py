from collections.abc import Iterable, Iterator


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


def lowest_bit(mask: int) -> int:
    return (mask & -mask).bit_length() - 1
