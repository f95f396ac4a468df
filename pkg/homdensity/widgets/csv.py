from _csv import QUOTE_MINIMAL

from .pandas import Pandas


class CSV(Pandas):
    def transform(self, records, use_raw_values=None):
        result_df = super(CSV, self).transform(records, use_raw_values=True)
        return result_df.to_csv(index=False, na_rep="", quoting=QUOTE_MINIMAL)
