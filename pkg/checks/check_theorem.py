"""theorem-class checks: a failure is an implementation bug"""

from checks.check_entry import CheckEntry
from gammalab import verify_operator_identities_all
from verify import (
    check_crs,
    check_crs_tau_all,
    check_cyclic,
    check_dumont,
    check_gamma_recurrence,
    check_klein,
    check_normalization,
    check_oracle_two_sided,
    check_oracle_typeB,
    check_reversal,
    check_rotation_lemma,
    check_symmetry,
    check_typeB_series_all,
)

check_dic: dict[str, CheckEntry] = dict()

check_dic.update(
    {
        "check_crs": CheckEntry(check_crs, "theorem", 6, "rec"),
        "check_crs_tau": CheckEntry(check_crs_tau_all, "theorem", 5, "S", sweep_cap=6),
        "check_typeB_series": CheckEntry(
            check_typeB_series_all, "theorem", 4, "B", sweep_cap=4
        ),
    }
)

check_dic.update(
    {
        "check_cyclic": CheckEntry(check_cyclic, "theorem", 6, "S", cap_offset=1),
        "check_rotation_lemma": CheckEntry(
            check_rotation_lemma, "theorem", 7, "S", min_n=2
        ),
    }
)

check_dic.update(
    {
        "check_klein": CheckEntry(check_klein, "theorem", 9, "rec"),
        "check_reversal": CheckEntry(check_reversal, "theorem", 7, "rec"),
        "verify_operator_identities": CheckEntry(
            verify_operator_identities_all, "theorem", 8, "rec"
        ),
        "check_gamma_recurrence": CheckEntry(check_gamma_recurrence, "theorem", 10, "rec"),
    }
)

check_dic.update(
    {
        "check_dumont": CheckEntry(check_dumont, "theorem", 8, "I"),
        "check_symmetry": CheckEntry(check_symmetry, "theorem", 8, "rec"),
        "check_oracle_two_sided": CheckEntry(check_oracle_two_sided, "theorem", 8, "S"),
        "check_oracle_typeB": CheckEntry(check_oracle_typeB, "theorem", 5, "B"),
        "check_normalization": CheckEntry(check_normalization, "theorem", 6, "rec"),
    }
)
