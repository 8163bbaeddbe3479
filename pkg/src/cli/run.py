import os
import csv
import json
import h5py
import logging
import numpy as np
from concurrent.futures import ProcessPoolExecutor, as_completed

from src import __version__
from src.errors import ValidationFailure
from src.cli.config import Command, RunConfig
from src.cli.commands import evaluate_point
from src.cli.validation import run_suite


def format_value(value) -> str:
    """
    CSV Cell with 17 significant Digits for Floats
    """
    if isinstance(value, (bool, np.bool_)):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.16e}" if np.isfinite(value) else str(float(value))
    return "" if value is None else str(value)


def json_ready(value):
    """
    Replace non-finite Floats by None and numpy Scalars by Python Types
    """
    if isinstance(value, dict):
        return {str(key): json_ready(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [json_ready(item) for item in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        return float(value) if np.isfinite(value) else None
    return value


class Run:
    """
    One Invocation of a Command over its Sweep
    Rows are collected in Sweep Order, Files are only written after every Point succeeded.
    """

    def __init__(self, config: RunConfig):
        self.config = config
        self.name = config.command.value
        self.iterators_list: list = [(axis.variable, axis.points()) for axis in config.sweeps]
        self.number_points = int(np.prod([len(values) for _, values in self.iterators_list])) \
            if self.iterators_list else 1
        self.rows: list[dict] = []
        self.annotations: list[dict] = []
        self.checks: list = []

    def sweep_points(self) -> list[dict]:
        """
        Cartesian Product of all Iterators, the first Iterator varies fastest
        """
        points: list[dict] = []
        if not self.iterators_list:
            return [{}]
        self.iterate_points({}, self.iterators_list, len(self.iterators_list) - 1, points)
        return points

    def iterate_points(self, var_dict: dict, iterators_array: list, index: int, points: list) -> None:
        """
        Recursively start one Loop for every Iterator
        """
        for iterator_value in iterators_array[index][1]:
            var_dict[iterators_array[index][0]] = float(iterator_value)
            if index > 0:
                self.iterate_points(var_dict, iterators_array, index - 1, points)
            else:
                # order of the Iterators, not of the Recursion
                points.append({name: var_dict[name] for name, _ in iterators_array})

    def evaluate(self, points: list[dict]) -> list[tuple[list, dict]]:
        """
        Evaluate all Points, in Worker Processes if configured, Results placed by Point Index
        """
        workers = min(self.config.workers, len(points))
        if workers <= 1:
            return [evaluate_point(self.config, point) for point in points]

        results: list = [None] * len(points)
        with ProcessPoolExecutor(max_workers=workers) as executor:
            futures = {executor.submit(evaluate_point, self.config, point): i for i, point in enumerate(points)}
            try:
                for future in as_completed(futures):
                    results[futures[future]] = future.result()
            except BaseException:
                executor.shutdown(wait=True, cancel_futures=True)
                raise
        return results

    def run(self) -> None:
        """
        Compute, then save CSV, JSON Sidecar and optionally the HDF5 Archive
        :raises ValidationFailure: a validate Check outside its Tolerance, after the Files are written
        """
        logging.info(f"{self.name}: Starting Run with {self.number_points} points and {self.config.workers} workers.")
        if self.config.command == Command.Validate:
            self.checks = run_suite(self.config.suite, self.config.cutoff, self.config.max_dimension)
            self.rows = [check.as_row() for check in self.checks]
        else:
            points = self.sweep_points()
            for point, (rows, annotation) in zip(points, self.evaluate(points)):
                self.rows.extend(rows)
                self.annotations.append({"point": point, **annotation})
        self.save_data()

        failed = [check for check in self.checks if not check.passed]
        if failed:
            raise ValidationFailure(f"Validate: {len(failed)} of {len(self.checks)} checks failed, first: "
                                    f"{failed[0].suite} / {failed[0].name}.")

    @property
    def columns(self) -> list[str]:
        columns: list[str] = []
        for row in self.rows:
            columns.extend(key for key in row if key not in columns)
        return columns

    def save_data(self):
        """
        Save Data of the Run
        """
        output = self.config.output
        directory = os.path.dirname(output)
        if directory and not os.path.isdir(directory):
            os.makedirs(directory)

        columns = self.columns
        with open(f"{output}.csv", 'w', newline='', encoding="utf-8") as file:
            writer = csv.writer(file, delimiter=',', lineterminator='\n')
            writer.writerow(columns)
            for row in self.rows:
                writer.writerow([format_value(row.get(column)) for column in columns])

        sidecar = {
            "command": self.name,
            "version": __version__,
            "config": self.config.as_dict(),
            "columns": columns,
            "rows": len(self.rows),
            "points": self.number_points,
            "annotations": self.annotations,
        }
        if self.checks:
            deviations = {f"{check.suite} / {check.name}": check.deviation for check in self.checks}
            sidecar["validation"] = {
                "passed": all(check.passed for check in self.checks),
                "max_deviation": {suite: max(check.deviation for check in self.checks if check.suite == suite)
                                  for suite in dict.fromkeys(check.suite for check in self.checks)},
                "deviations": deviations,
            }
        with open(f"{output}.json", 'w', encoding="utf-8") as file:
            json.dump(json_ready(sidecar), file, indent=2, sort_keys=True)

        if self.config.hdf5:
            self.save_archive(columns)
        logging.info(f"{self.name}: Saved {len(self.rows)} rows to '{output}.csv'.")

    def save_archive(self, columns: list[str]):
        """
        HDF5 Archive with the Groups Meta Info, Iterators and Observables
        """
        path = f"{self.config.output}_raw_data.h5"
        if os.path.exists(path):
            os.remove(path)
        run_info = np.array([f"Command: {self.name}", f"Version: {__version__}",
                             f"Preset: {self.config.preset}"], dtype='S')
        parameters_info = np.array([f"{name}: {value}" for name, value in self.config.as_dict().items()], dtype='S')
        iterators_info = np.array([f"{name}: {values[0]:g} .. {values[-1]:g} ({len(values)})"
                                   for name, values in self.iterators_list], dtype='S')

        with h5py.File(path, 'a') as file:
            file.create_group("Meta Info")
            file.create_group("Iterators")
            file.create_group("Observables")
            file["Meta Info"].create_dataset(name="Run", data=run_info)
            file["Meta Info"].create_dataset(name="Parameters", data=parameters_info)
            file["Meta Info"].create_dataset(name="Iterators", data=iterators_info)
            for name, value in self.iterators_list:
                file["Iterators"].create_dataset(name=name.replace('/', 'in'), data=value, dtype='f8')
            for column in columns:
                values = [row.get(column) for row in self.rows]
                if all(isinstance(value, (int, float, np.integer, np.floating)) and not isinstance(value, bool)
                       for value in values):
                    data = np.array(values, dtype='f8')
                else:
                    data = np.array([format_value(value) for value in values], dtype='S')
                file["Observables"].create_dataset(name=column.replace('/', 'in'), data=data)
