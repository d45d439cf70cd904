"""The disjoint base-point object ``∗`` and its identity morphism."""


class BasePoint:
    """Singleton base-point. Only morphism in or out: its own identity."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "∗"

    def __reduce__(self):
        return (BasePoint, ())


class BasePointIdentity:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    source = property(lambda self: BASEPOINT)
    target = property(lambda self: BASEPOINT)

    def __repr__(self):
        return "Id_∗"


BASEPOINT = BasePoint()
BASEPOINT_ID = BasePointIdentity()
