"""eulerian walk-through"""

import sys
import json

# two-sided-eulerian
sys.path.append(
    __file__[0 : __file__.find("two-sided-eulerian") + len("two-sided-eulerian")]
)

# pylint: disable=wrong-import-position
from tests.settings import settings
from exactpoly import poly_to_json
from gammalab import expand_gamma, format_gamma, four_variable_spec, gamma_bivariate_rec
from genpoly import brute_two_sided, brute_typeB, rec_four_variable, rec_two_sided
from verify import check_klein, run_suite, summarize


def two_sided_brute():
    """A_n(s,t) by enumeration over S_n"""

    p = brute_two_sided(3, settings=settings)

    # st + 4s^2t^2 + s^3t^3
    print(two_sided_brute.__name__, p)


def two_sided_rec():
    """A_n(s,t) by the two-sided recurrence, same as enumeration"""

    p = rec_two_sided(6, settings)

    # True
    print(two_sided_rec.__name__, p == brute_two_sided(6, settings=settings))


def four_variable_json():
    """A_2(s,t;x,y) in the JSON contract"""

    p = rec_four_variable(2, settings)

    # {"vars": ["s", "t", "x", "y"], "terms": [{"e": [1, 1, 2, 2], "c": "1"}, {"e": [2, 2, 1, 1], "c": "1"}]}
    print(four_variable_json.__name__, json.dumps(poly_to_json(p)))


def gamma_expansion():
    """A_5(s,t;x,y) in the gamma basis"""

    spec = four_variable_spec(5)
    row = expand_gamma(rec_four_variable(5, settings), spec, 5)

    # stxy(st+xy)^4 + 16(stxy)^2(st+xy)^2 + 6(stxy)^2(st+xy)(tx+sy) + 16(stxy)^3
    print(gamma_expansion.__name__, format_gamma(row, spec))


def gamma_recurrence():
    """gamma rows from the coefficient recurrence"""

    rows = gamma_bivariate_rec(4)

    # {(1, 3): 1, (2, 0): 1, (2, 1): 7}
    print(gamma_recurrence.__name__, rows[-1].entries)


def type_B():
    """B_n(s,t) by enumeration over signed permutations"""

    p = brute_typeB(2, settings=settings)

    # 1 + 6st + s^2t^2
    print(type_B.__name__, p)


def klein_symmetry():
    """double transpositions fix A_n(s,t;x,y), s <-> x alone does not"""

    report = check_klein(5, settings)

    # pass False
    print(klein_symmetry.__name__, report.outcome, report.details["fully_symmetric"])


def suite_with_hooks():
    """run checks in worker processes, hooks print around every check"""

    reports = run_suite(["check_cyclic", "check_invseq"], max_n=5, settings=settings)

    # CHECK_START, CHECK: "check_cyclic", PARAMS: {'n': 1}
    # ...
    # CHECK_END, CHECK: "check_invseq", OUTCOME: pass, DURATION: 3
    # {'counts': {'pass': 10, 'fail': 0, 'skipped': 0}, 'theorem_failures': []}
    print(suite_with_hooks.__name__, summarize(reports))


if __name__ == "__main__":
    two_sided_brute()
    two_sided_rec()
    four_variable_json()
    gamma_expansion()
    gamma_recurrence()
    type_B()
    klein_symmetry()
    suite_with_hooks()

# python tests/console/console.py
