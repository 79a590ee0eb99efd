"""conjecture-class checks: a failure is a finding, reported with full state"""

from checks.check_entry import CheckEntry
from gammalab import check_gessel, check_gessel_tau
from verify import check_invseq, check_tau_independence

check_dic: dict[str, CheckEntry] = dict()

check_dic.update(
    {
        "check_gessel": CheckEntry(check_gessel, "conjecture", 10, "rec"),
        "check_gessel_tau": CheckEntry(check_gessel_tau, "conjecture", 5, "S", sweep_cap=6),
    }
)

check_dic.update(
    {
        "check_tau_independence": CheckEntry(
            check_tau_independence, "conjecture", 6, "S", sweep_cap=6
        ),
        "check_invseq": CheckEntry(check_invseq, "conjecture", 9, "I"),
    }
)
