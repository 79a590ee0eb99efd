"""golden data for gamma rows"""

from tests.pytest.golden_data.data_model import GoldenGamma

gamma_list: list[GoldenGamma] = []

# four-variable rows: j is the exponent of (st+xy)
gamma_list.append(GoldenGamma(flavor="four-variable", n=1, entries={"1,0": 1}))
gamma_list.append(GoldenGamma(flavor="four-variable", n=2, entries={"1,1": 1}))
gamma_list.append(
    GoldenGamma(flavor="four-variable", n=3, entries={"1,2": 1, "2,0": 2})
)
gamma_list.append(
    GoldenGamma(flavor="four-variable", n=4, entries={"1,3": 1, "2,1": 7, "2,0": 1})
)
gamma_list.append(
    GoldenGamma(
        flavor="four-variable",
        n=5,
        entries={"1,4": 1, "2,2": 16, "2,1": 6, "3,0": 16},
    )
)

gamma_list.append(GoldenGamma(flavor="univariate", n=1, entries={"1": 1}))
gamma_list.append(GoldenGamma(flavor="univariate", n=2, entries={"1": 1}))
gamma_list.append(GoldenGamma(flavor="univariate", n=3, entries={"1": 1, "2": 2}))
gamma_list.append(GoldenGamma(flavor="univariate", n=4, entries={"1": 1, "2": 8}))
gamma_list.append(
    GoldenGamma(flavor="univariate", n=5, entries={"1": 1, "2": 22, "3": 16})
)

gamma_list.append(GoldenGamma(flavor="type-B", n=1, entries={"0,0": 1}))
gamma_list.append(GoldenGamma(flavor="type-B", n=2, entries={"0,0": 1, "1,0": 4}))
