"""
Errors raised by the duality toolkit.

Every error carries a stable ``code`` and the witnesses that caused it, so the
command line can report a failure as JSON without parsing messages.
"""


class DualityToolkitError(Exception):
    code = 'toolkit_error'

    def __init__(self, message: str, **context) -> None:
        super().__init__(message)
        self.message = message
        self.context = context

    def to_dict(self) -> dict:
        return {
            'error': self.code,
            'message': self.message,
            'context': {key: _jsonable(value) for key, value in self.context.items()},
        }


def _jsonable(value):
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (str, int, float, bool)) or value is None:
        return value
    return str(value)


# Tables and monoids

class MalformedTable(DualityToolkitError):
    code = 'malformed_table'


class NotAssociative(DualityToolkitError):
    code = 'not_associative'

    def __init__(self, x: int, y: int, z: int) -> None:
        super().__init__(f'({x}+{y})+{z} != {x}+({y}+{z})', x=x, y=y, z=z)
        self.witness = (x, y, z)


class NoNeutralElement(DualityToolkitError):
    code = 'no_neutral_element'

    def __init__(self) -> None:
        super().__init__('table has no neutral element')


class NotCommutative(DualityToolkitError):
    code = 'not_commutative'

    def __init__(self, x: int, y: int) -> None:
        super().__init__(f'{x}+{y} != {y}+{x}', x=x, y=y)
        self.witness = (x, y)


class InvalidLattice(DualityToolkitError):
    code = 'invalid_lattice'


class UnknownLabel(DualityToolkitError):
    code = 'unknown_label'

    def __init__(self, label: str) -> None:
        super().__init__(f'no catalog entry named {label!r}', label=label)


# Semirings

class AdditiveNotCommutativeMonoid(DualityToolkitError):
    code = 'additive_not_commutative_monoid'


class MulNotMonoid(DualityToolkitError):
    code = 'mul_not_monoid'


class ZeroNotAbsorbing(DualityToolkitError):
    code = 'zero_not_absorbing'

    def __init__(self, x: int) -> None:
        super().__init__(f'multiplying {x} by zero does not give zero', x=x)
        self.witness = x


class NotDistributive(DualityToolkitError):
    code = 'not_distributive'

    def __init__(self, x: int, y: int, z: int, side: str) -> None:
        super().__init__(f'{side} distributivity fails at ({x}, {y}, {z})', x=x, y=y, z=z, side=side)
        self.witness = (x, y, z)
        self.side = side


# Search limits

class OrderTooLarge(DualityToolkitError):
    code = 'order_too_large'

    def __init__(self, order: int, cap: int) -> None:
        super().__init__(f'order {order} exceeds the supported maximum {cap}', order=order, cap=cap)


class SizeBudgetExceeded(DualityToolkitError):
    code = 'size_budget_exceeded'

    def __init__(self, size: int, budget: int) -> None:
        super().__init__(f'{size} exceeds the size budget {budget}', size=size, budget=budget)


class StateSpaceTooLarge(DualityToolkitError):
    code = 'state_space_too_large'

    def __init__(self, states: int, cap: int) -> None:
        super().__init__(f'{states} states exceed the limit {cap}', states=states, cap=cap)


# Homomorphisms and duality functions

class AdjointNotClosed(DualityToolkitError):
    code = 'adjoint_not_closed'


class NotIsomorphism(DualityToolkitError):
    code = 'not_isomorphism'


class Condition1Fail(DualityToolkitError):
    code = 'condition_1_fail'

    def __init__(self, x1: int, x2: int) -> None:
        super().__init__(f'rows {x1} and {x2} coincide', x1=x1, x2=x2)


class Condition2Fail(DualityToolkitError):
    code = 'condition_2_fail'

    def __init__(self, missing, extra) -> None:
        super().__init__('columns do not match the homomorphisms out of S', missing=missing, extra=extra)


class Condition3Fail(DualityToolkitError):
    code = 'condition_3_fail'

    def __init__(self, y1: int, y2: int) -> None:
        super().__init__(f'columns {y1} and {y2} coincide', y1=y1, y2=y2)


class Condition4Fail(DualityToolkitError):
    code = 'condition_4_fail'

    def __init__(self, missing, extra) -> None:
        super().__init__('rows do not match the homomorphisms out of R', missing=missing, extra=extra)


class UnmatchedClass(DualityToolkitError):
    code = 'unmatched_class'


class NoDual(DualityToolkitError):
    code = 'no_dual'


# Simulation

class InvalidRate(DualityToolkitError):
    code = 'invalid_rate'


class WindowViolation(DualityToolkitError):
    code = 'window_violation'

    def __init__(self, s: float, u: float, window) -> None:
        super().__init__(f'[{s}, {u}] is not inside the stream window {list(window)}', s=s, u=u, window=window)


class DualityViolation(DualityToolkitError):
    code = 'duality_violation'

    def __init__(self, x, y, stream=None) -> None:
        super().__init__('pathwise duality identity fails', x=x, y=y, events=None if stream is None else len(stream.events))
        self.x = x
        self.y = y
        self.stream = stream


class NoRealEmbedding(DualityToolkitError):
    code = 'no_real_embedding'
