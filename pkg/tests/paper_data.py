"""Published worked examples, transcribed once for reuse across test modules."""

# maximal pairs for s=2, n=6, k=2 (all residue 0), in the printed order
MAXIMAL_2_6_2 = [
    "111111", "111110", "111101", "111100", "111010", "111001", "111000", "110110",
    "110101", "110100", "110010", "110001", "110000", "101010", "101001", "101000",
    "100101", "100100", "100001", "100000", "010101", "010100", "010000", "000000",
]

# Lyndon words whose concatenation is the greatest (6,2)-perfect necklace, s=2
BLOCKS_2_6_2 = (
    "11 | 111110 | 111101 | 111100 | 111010 | 111001 | 111000 | 110110 | 110101 | "
    "110100 | 110010 | 110001 | 110000 | 10 | 101001 | 101000 | 100101 | 100100 | "
    "100001 | 100000 | 01 | 010100 | 010000 | 00"
).split(" | ")

NECKLACE_2_6_2 = "".join(BLOCKS_2_6_2)

# binary Lyndon words with length dividing 4, greatest first
FKM_BLOCKS_2_4 = ["1", "1110", "1100", "10", "1000", "0"]

PERFECT_2_2_2 = "11100100"
