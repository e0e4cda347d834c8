class BergmanError(Exception):
    pass


class InvalidInputError(BergmanError, ValueError):
    pass


class ResourceLimitError(BergmanError):
    pass


class NotUltrametricError(BergmanError):
    """
    Raised when a dissimilarity map fails the three-point condition.
    witness is a triple (i, j, k) whose maximum is attained only once.
    """

    def __init__(self, witness):
        self.witness = tuple(witness)
        super().__init__("not an ultrametric, witness triple {}".format(self.witness))
