import pytest
from hypothesis import strategies as st

from motivic_chi.gw import Coefficient, FieldModel, normal_form

MODELS = [
    FieldModel.generic(),
    FieldModel.sqrt_minus_one(),
    FieldModel.real_closed(),
    FieldModel.finite(3),
    FieldModel.finite(5),
    FieldModel.finite(7),
    FieldModel.finite(13),
]


@pytest.fixture(params=MODELS, ids=str)
def model(request):
    return request.param


def coefficients(m):
    ints = st.integers(-50, 50)
    if m.char_exponent == 1:
        return ints.map(lambda n: Coefficient(n))
    return st.builds(lambda n, e: Coefficient(n, e, m.char_exponent), ints, st.integers(0, 2))


def elements(m):
    return st.builds(lambda a, b: normal_form(a, b, m), coefficients(m), coefficients(m))


models = st.sampled_from(MODELS)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
