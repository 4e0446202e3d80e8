from tqdm import tqdm


class ProgressBar:
    """
    A terminal progress bar on stderr, driven by percentages.

    Methods
    -------
    update_progress(value: int)
        Move the bar to the given percentage.
    close()
        Close the bar.
    """

    def __init__(self, description: str = "Working"):
        self.bar = tqdm(total=100, desc=description, unit="%", leave=False)

    def update_progress(self, value: int):
        """
        Move the bar to the given percentage.
        """
        self.bar.update(max(value - self.bar.n, 0))

    def close(self):
        self.bar.close()
