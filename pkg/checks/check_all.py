"""check collection"""

from checks.check_conjecture import check_dic as check_conjecture
from checks.check_theorem import check_dic as check_theorem

check_all = [check_theorem, check_conjecture]

check_dic = {}
for check_cur in check_all:
    dup = check_dic.keys() & check_cur.keys()
    if dup:
        raise ValueError(
            f"duplicated keys: {dup} in {check_dic.keys()} and {check_cur.keys()}"
        )

    check_dic |= check_cur

suites: dict[str, list[str]] = {
    "theorems": list(check_theorem),
    "conjectures": list(check_conjecture),
    "all": list(check_dic),
}
