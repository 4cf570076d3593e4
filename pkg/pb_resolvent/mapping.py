from pb_resolvent import keys


class Dispatcher(dict):
    """Is basically a dict with a better error message on key error.

    >>> d = Dispatcher(add=1)
    >>> d['sub']
    Traceback (most recent call last):
    ...
    KeyError: "Invalid option 'sub'. Possible keys are dict_keys(['add'])."
    """

    def __getitem__(self, item):
        try:
            return super().__getitem__(item)
        except KeyError:
            raise KeyError(
                f'Invalid option {item!r}. Possible keys are {self.keys()!r}.'
            ) from None


# Method tags of a solve report, ordered as the solve subcommand tries them.
METHODS = (
    keys.METHOD_QUADRATIC,
    keys.METHOD_CUBIC,
    keys.METHOD_QUARTIC,
    keys.METHOD_QUARTIC_SQUARED,
    keys.METHOD_MOIVRE,
    keys.METHOD_RECIPROCAL,
    keys.METHOD_NUMERIC,
)

# Method used by `solve` for the depressed polynomial of a given degree.
degree_to_method = Dispatcher({
    1: keys.METHOD_QUADRATIC,  # linear equations ride along, no radical
    2: keys.METHOD_QUADRATIC,
    3: keys.METHOD_CUBIC,
    4: keys.METHOD_QUARTIC,
})

# Resolvent kinds selectable by the `resolvent` subcommand.
RESOLVENT_KINDS = ('quadratic', 'cubic', 'quartic', 'squared')

degree_to_resolvent_kind = Dispatcher({
    2: 'quadratic',
    3: 'cubic',
    4: 'quartic',
})

BRANCH_CONVENTIONS = ('principal',)
