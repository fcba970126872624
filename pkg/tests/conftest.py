import pytest

from discomine.lexicon import default_lexicon, parse_lexicon


@pytest.fixture(scope="session")
def lexicon():
    return default_lexicon()


@pytest.fixture(scope="session")
def small_lexicon():
    """Hand-picked entries, enough for the documented cases."""
    return parse_lexicon(
        "\n".join(
            [
                "but\tComparison.Contrast\targ2_initial",
                "because\tContingency.Cause\targ2_initial",
                "moreover\tExpansion.Conjunction\targ2_initial,arg2_medial",
                "therefore\tContingency.Cause\targ2_initial,arg2_medial",
                "however\tComparison.Contrast\targ2_initial,arg2_medial",
                "also\tExpansion.Conjunction\targ2_initial,arg2_medial",
                "after all\tContingency.Cause\targ2_initial,arg2_medial",
                "in addition\tExpansion.Conjunction\targ2_initial,arg2_medial",
                "if … then\tContingency.Cause\targ2_initial",
            ]
        )
    )
