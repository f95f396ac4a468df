from homdensity.exceptions import HomDensityException


class ColumnRequiredException(HomDensityException):
    pass


class Widget:
    """
    Renders a list of report records. A record is an ordered mapping of column name to raw value.

    :param columns:
        Restricts and orders the rendered columns. When omitted, every column of the first record is rendered.
    """

    def __init__(self, *columns: str):
        self.columns = list(columns)

    def select_columns(self, records):
        if self.columns:
            return self.columns
        if not records:
            raise ColumnRequiredException(str(self))
        return list(records[0].keys())

    def transform(self, records):
        """
        - Main entry point -

        :param records:
            A list of ordered mappings, one per output row.
        :return:
            The rendered output.
        """
        raise NotImplementedError()

    def __eq__(self, other):
        return isinstance(other, self.__class__) and self.columns == other.columns

    def __repr__(self):
        return "{}({})".format(self.__class__.__name__, ",".join(self.columns))
