"""Case data of the dimension formula, transcribed once and kept here.

Periodic rows are stored as tuples indexed by residue; selectors are keyed
by the residue of j.  ``transcription_checksum()`` hashes everything in this
module so that accidental edits show up in the test suite.
"""

import hashlib
from fractions import Fraction as Fr

# H2: factor by (2 | D1, D2) case.
H2_FACTOR = {"2!|D1,D2=1": 7, "2|D1,D2=1": 13, "D2=2": 3, "otherwise": 0}
# H3 / H4 / H5 / H8: factor by D2.
H3_FACTOR = {1: 1, 2: 3}
H4_FACTOR = {1: 1, 3: 8}
H5_FACTOR = {1: 1}

# H6: B keyed by (where 2 sits, whether 2 | n).
H6_B = {
    ("D1", True): 5,
    ("D1", False): 11,
    ("D2", True): 7,
    ("D2", False): 9,
    ("none", True): 3,
    ("none", False): 5,
}
# H7: B keyed by (where 3 sits, whether 3 | n).
H7_B = {
    ("D1", True): 1,
    ("D1", False): 16,
    ("D2", True): 4,
    ("D2", False): 10,
    ("none", True): 1,
    ("none", False): 4,
}

# H8: C1 row selected by j mod 12, indexed by k mod 12.
C1 = {
    0: (1, 0, 0, -1, -1, -1, -1, 0, 0, 1, 1, 1),
    2: (-1, 1, 0, 1, 1, 0, 1, -1, 0, -1, -1, 0),
    4: (1, -1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1),
    6: (-1, 0, 0, -1, 1, -1, 1, 0, 0, 1, -1, 1),
    8: (1, 1, 0, 1, -1, 0, -1, -1, 0, -1, 1, 0),
    10: (-1, -1, 0, 0, 1, 1, 1, 1, 0, 0, -1, -1),
}

# H9: factor by case; C2 row by j mod 6, indexed by k mod 6.
H9_FACTOR = {"2!|D1,D2=1": 2, "2|D1,D2=1": 5, "2!|D1,D2=2": 3, "otherwise": 0}
C2 = {
    0: (1, 0, 0, -1, 0, 0),
    2: (-1, 1, 0, 1, -1, 0),
    4: (0, -1, 0, 0, 1, 0),
}

# H10: C3 row by j mod 10, indexed by k mod 5.
C3 = {
    0: (1, 0, 0, -1, 0),
    2: (-1, 1, 0, 0, 0),
    4: (0, 0, 0, 0, 0),
    6: (0, 0, 0, 1, -1),
    8: (0, -1, 0, 0, 1),
}
# Residues mod 5 that kill H10 when present among the primes of D1 / D2.
H10_D1_BLOCKING = (1, 2, 3)
H10_D2_BLOCKING = (1, 4)

# H11: C4 row by j mod 8, indexed by k mod 4.
C4 = {
    0: (1, 0, 0, -1),
    2: (-1, 1, 0, 0),
    4: (-1, 0, 0, 1),
    6: (1, -1, 0, 0),
}

# H12: A/B values. Rows keyed by (where 2 sits, where 3 sits); columns are
# cases (I), (II), (III).
H12_TABLE = {
    ("none", "none"): (Fr(0), Fr(1, 2), Fr(1)),
    ("none", "D1"): (Fr(1, 2), Fr(3, 4), Fr(1)),
    ("none", "D2"): (Fr(0), Fr(1, 4), Fr(1, 2)),
    ("D1", "none"): (Fr(1), Fr(3, 4), Fr(1, 2)),
    ("D1", "D1"): (Fr(5, 4), Fr(9, 8), Fr(1)),
    ("D1", "D2"): (Fr(1, 2), Fr(3, 8), Fr(1, 4)),
    ("D2", "none"): (Fr(1, 2), Fr(1, 4), Fr(0)),
    ("D2", "D1"): (Fr(1, 2), Fr(3, 8), Fr(1, 4)),
    ("D2", "D2"): (Fr(1, 4), Fr(1, 8), Fr(0)),
}
CASE_I, CASE_II, CASE_III = 0, 1, 2


def transcription_checksum() -> str:
    blob = repr(
        (
            H2_FACTOR, H3_FACTOR, H4_FACTOR, H5_FACTOR,
            sorted(H6_B.items()), sorted(H7_B.items()),
            sorted(C1.items()), H9_FACTOR, sorted(C2.items()),
            sorted(C3.items()), H10_D1_BLOCKING, H10_D2_BLOCKING,
            sorted(C4.items()), sorted(H12_TABLE.items()),
        )
    )
    return hashlib.sha256(blob.encode()).hexdigest()
