"""Exception types shared across the package."""


class EnumOrderError(ValueError):
    pass


class ParseError(EnumOrderError):
    def __init__(self, line, text="", source=None):
        self.line = line
        self.text = text
        self.source = source
        where = f"{source}:{line}" if source else f"line {line}"
        super().__init__(f"{where}: cannot parse {text!r} as a natural number >= 1")


class DuplicateValue(EnumOrderError):
    def __init__(self, value, first_pos=None, second_pos=None):
        self.value = value
        self.first_pos = first_pos
        self.second_pos = second_pos
        if first_pos is None:
            msg = f"duplicate value {value}"
        else:
            msg = f"duplicate value {value} at positions {first_pos} and {second_pos}"
        super().__init__(msg)


class OutOfRange(EnumOrderError, IndexError):
    pass


class ValueCollision(EnumOrderError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"value {value} occurs in both listings")


class SetMismatch(EnumOrderError):
    pass


class LengthMismatch(EnumOrderError):
    pass


class TooShort(EnumOrderError):
    def __init__(self, name, length, required):
        self.name = name
        self.length = length
        self.required = required
        super().__init__(f"listing {name!r} has length {length}, need at least {required}")


class StepGap(EnumOrderError):
    pass


class InvalidProgram(EnumOrderError):
    def __init__(self, address, reason, source=None):
        self.address = address
        self.reason = reason
        self.source = source
        prefix = f"{source}: " if source else ""
        super().__init__(f"{prefix}instruction {address}: {reason}")
