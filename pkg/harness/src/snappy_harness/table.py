"""Reference volumes for the knotted-ribbon verification rows.

Rows three and four are distinct links sharing one volume.  Tangle words are
operator-supplied per row (the row pictures fix the links only up to the
operator's reading); the harness records the word used next to each result.
"""

EXPECTED_VOLUMES = {
    1: 17.509452564,
    2: 19.377635979,
    3: 20.068375558,
    4: 20.068375558,
    5: 21.7380936554,
    6: 26.067864330,
}

DEFAULT_TOLERANCE = 1e-6
