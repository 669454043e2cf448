class FanBase:
    pass


class DivisorBase:
    pass


class PairBase:
    pass


class PolyConeBase:
    pass


class TraceBase:
    pass
