import random

from hypothesis import HealthCheck, settings

from diskbwt import (Alphabet, StringCollection, Workspace, build_columns,
                     merge_passes, partition_suffixes, validate_collection)

settings.register_profile(
    "suite",
    deadline=None,
    max_examples=40,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("suite")

ALPHABETS = {2: Alphabet("AC"), 4: Alphabet("ACGT")}


def make_coll(strings, letters="ACGT") -> StringCollection:
    return validate_collection(list(strings), Alphabet(letters))


def random_strings(rng: random.Random, m: int, k: int, letters: str) -> list[str]:
    return ["".join(rng.choice(letters) for _ in range(k)) for _ in range(m)]


def random_instance(rng: random.Random, max_m=50, max_k=20,
                    force_duplicates=False, plant_shared=False):
    """A random collection plus its alphabet, optionally with planted structure."""
    sigma = rng.choice((2, 4))
    alpha = ALPHABETS[sigma]
    m = rng.randint(1, max_m)
    k = rng.randint(1, max_k)
    strings = random_strings(rng, m, k, alpha.letters)
    if force_duplicates and m > 1:
        for _ in range(rng.randint(1, max(1, m // 3))):
            strings[rng.randrange(m)] = strings[rng.randrange(m)]
    if plant_shared and m > 1 and k >= 2:
        sub = "".join(rng.choice(alpha.letters) for _ in range(rng.randint(2, k)))
        for _ in range(rng.randint(2, min(m, 5))):
            i = rng.randrange(m)
            pos = rng.randint(0, k - len(sub))
            s = strings[i]
            strings[i] = s[:pos] + sub + s[pos + len(sub):]
    return strings, alpha


def run_partition(coll, root, rolling=True, verify=False):
    ws = Workspace(root, rolling=rolling)
    cm = build_columns(coll, ws)
    return partition_suffixes(coll, cm, ws, verify=verify), ws


def collect_merge_states(coll, root):
    """All merge pass states with every intermediate file retained."""
    columns, ws = run_partition(coll, root, rolling=False)
    return list(merge_passes(coll, columns, ws)), columns, ws
