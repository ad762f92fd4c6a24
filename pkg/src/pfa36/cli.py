"""Command-line front end for the simulated signal chain.

Binary frames move between stages through files or pipes using the wire
format, so the stages compose::

    pfa36 synth --frames 4 | pfa36 fft | pfa36 analyze

which gives the same report as ``pfa36 pipeline --frames 4``.

Every option can also come from a ``key = value`` file passed with
``--config``; command-line flags win.  Keys are the long option names
with or without dashes (``sample-rate`` or ``sample_rate``).

Exit status:
    0  success
    2  usage error
    3  I/O error
    4  malformed stream (trailing partial frame, NaN payload)
    5  no signal (no complete frames, or no tone in any frame)
"""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from typing import Iterator, Optional

import numpy as np

from .acquisition import AcquisitionConfig, capture_frame, frame_start_time
from .complex_core import ComplexSample
from .oracle import naive_dft
from .pfa import opcount_report, pfa36
from .small_ffts import kernel_cost
from .spectrum import NO_SIGNAL_VOLTS, AnalysisError, analyze_frame, write_plot_data
from .wire import FRAME_BYTES, StreamDecoder, encode_frame

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3
EXIT_MALFORMED = 4
EXIT_NO_SIGNAL = 5

DEFAULT_PACE_SECONDS = 0.5

log = logging.getLogger("pfa36")

# config-file key -> argparse dest
_CONFIG_KEYS = {
    "amplitude": "amplitude",
    "frequency": "frequency",
    "offset": "offset",
    "sample_rate": "sample_rate",
    "full_scale": "full_scale",
    "frames": "frames",
    "in": "in_path",
    "out": "out_path",
    "skip_bytes": "skip_bytes",
    "pace": "pace",
    "format": "format",
    "plot_dir": "plot_dir",
    "no_figures": "no_figures",
    "noise_floor": "noise_floor",
}


class ConfigError(ValueError):
    pass


def read_config_file(path) -> dict[str, str]:
    """Parse ``key = value`` lines; blank lines and ``#`` comments are skipped."""
    values = {}
    with open(path) as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"{path}:{lineno}: expected key = value")
            key, value = (part.strip() for part in line.split("=", 1))
            key = key.lstrip("-").replace("-", "_")
            if key not in _CONFIG_KEYS:
                raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
            values[_CONFIG_KEYS[key]] = value
    return values


def _str_to_bool(value):
    if isinstance(value, bool):
        return value
    return value.strip().lower() in ("1", "true", "yes", "on")


def _options() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="key = value file supplying defaults for any option")
    sig = p.add_argument_group("signal")
    sig.add_argument("--amplitude", type=float, default=1.0, help="tone amplitude in volts")
    sig.add_argument("--frequency", type=float, default=5000.0, help="tone frequency in Hz")
    sig.add_argument("--offset", type=float, default=0.0, help="DC offset in volts")
    sig.add_argument("--sample-rate", dest="sample_rate", type=float, default=36000.0,
                     help="ADC sample rate in Hz")
    sig.add_argument("--full-scale", dest="full_scale", type=float, default=6.6,
                     help="differential full-scale range in volts")
    sig.add_argument("--frames", type=int, default=1, help="number of frames to capture")
    io = p.add_argument_group("io")
    io.add_argument("--in", dest="in_path", default=None, help="input file ('-' or omitted: stdin)")
    io.add_argument("--out", dest="out_path", default=None,
                    help="output file ('-' or omitted: stdout)")
    io.add_argument("--skip-bytes", dest="skip_bytes", type=int, default=0,
                    help="drop this many leading input bytes to resynchronise on a frame boundary")
    io.add_argument("--pace", type=float, nargs="?", const=DEFAULT_PACE_SECONDS, default=None,
                    help=f"sleep between frames (seconds, {DEFAULT_PACE_SECONDS} if no value)")
    io.add_argument("--format", choices=("text", "structured"), default="text",
                    help="report format: key=value text lines or JSON lines")
    io.add_argument("--plot-dir", dest="plot_dir", default=None,
                    help="write per-frame plot data (and figures) into this directory")
    io.add_argument("--no-figures", dest="no_figures", action="store_true",
                    help="with --plot-dir, write only the two-column data files")
    io.add_argument("--noise-floor", dest="noise_floor", type=float, default=NO_SIGNAL_VOLTS,
                    help="peaks at or below this amplitude (volts) count as no signal")
    return p


def build_parser(config: Optional[dict] = None) -> argparse.ArgumentParser:
    common = _options()
    parser = argparse.ArgumentParser(
        prog="pfa36",
        description="36-point prime factor FFT and simulated ADC spectrum analyser",
    )
    parser.add_argument("--config", help="key = value file supplying defaults for any option")
    sub = parser.add_subparsers(dest="command", required=True)
    if config and "no_figures" in config:
        config = dict(config, no_figures=_str_to_bool(config["no_figures"]))
    helps = {
        "synth": "capture tone frames from the simulated ADC and write them as wire frames",
        "fft": "transform wire frames with the 36-point PFA",
        "analyze": "estimate tone frequency and amplitude from spectrum frames",
        "pipeline": "synth, fft and analyze in one process",
        "opcount": "print real add/multiply counts against the direct DFT",
        "oracle": "compare the PFA against a direct double-precision DFT",
    }
    for name, text in helps.items():
        sp = sub.add_parser(name, parents=[common], help=text, description=text)
        if config:
            sp.set_defaults(**config)
    return parser


def _acquisition(args) -> AcquisitionConfig:
    return AcquisitionConfig(
        amplitude_volts=args.amplitude,
        frequency_hz=args.frequency,
        offset_volts=args.offset,
        sample_rate_hz=args.sample_rate,
        full_scale_volts=args.full_scale,
    )


def _open_in(path):
    if path in (None, "-"):
        return sys.stdin.buffer, False
    return open(path, "rb"), True


def _open_out(path, binary=True):
    if path in (None, "-"):
        return (sys.stdout.buffer if binary else sys.stdout), False
    return open(path, "wb" if binary else "w"), True


class _FrameReader:
    """Reads whole wire frames from a byte stream, remembering partial tails."""

    def __init__(self, stream, skip_bytes: int = 0):
        self._stream = stream
        self._decoder = StreamDecoder(skip_bytes)

    def __iter__(self) -> Iterator[list[ComplexSample]]:
        read = getattr(self._stream, "read1", self._stream.read)
        while True:
            data = read(FRAME_BYTES)
            if not data:
                break
            yield from self._decoder.feed(data)

    @property
    def leftover(self) -> int:
        return len(self._decoder.leftover)


def _pace(args, index: int) -> None:
    if args.pace and index > 0:
        time.sleep(args.pace)


def _synth_frames(args) -> Iterator[list[ComplexSample]]:
    cfg = _acquisition(args)
    for i in range(args.frames):
        _pace(args, i)
        yield capture_frame(cfg, frame_start_time(cfg, i))


def cmd_synth(args) -> int:
    out, close = _open_out(args.out_path)
    try:
        for frame in _synth_frames(args):
            out.write(encode_frame(frame))
            out.flush()
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_fft(args) -> int:
    src, close_in = _open_in(args.in_path)
    out, close_out = _open_out(args.out_path)
    count = 0
    try:
        reader = _FrameReader(src, args.skip_bytes)
        for frame in reader:
            out.write(encode_frame(pfa36(frame)))
            out.flush()
            count += 1
    finally:
        if close_in:
            src.close()
        if close_out:
            out.close()
    if reader.leftover:
        log.warning("ignored %d trailing bytes (partial frame) after %d frames",
                    reader.leftover, count)
        return EXIT_MALFORMED
    return EXIT_OK


class _Reporter:
    """Writes one report record per analysed frame, plus optional plot files."""

    def __init__(self, args, out):
        self.args = args
        self.out = out
        self.frames = 0
        self.tones = 0
        self.invalid = 0
        if args.plot_dir:
            os.makedirs(args.plot_dir, exist_ok=True)

    def emit(self, index: int, spectrum) -> None:
        args = self.args
        self.frames += 1
        try:
            fine, report = analyze_frame(spectrum, args.sample_rate, args.noise_floor)
        except AnalysisError as exc:
            log.error("frame %d: %s", index, exc)
            self.invalid += 1
            return
        if not report.no_signal:
            self.tones += 1
        if args.format == "structured":
            self.out.write(report.to_json() + "\n")
        else:
            self.out.write(report.to_text(index) + "\n")
        self.out.flush()
        if args.plot_dir:
            stem = os.path.join(args.plot_dir, f"frame_{index:04d}")
            write_plot_data(stem + ".dat", fine)
            if not args.no_figures:
                from .plotting import save_spectrum_figure
                save_spectrum_figure(stem + ".png", spectrum, fine, report, title=f"frame {index}")

    def status(self, leftover: int = 0) -> int:
        if self.frames == 0:
            log.warning("no complete frames")
            return EXIT_NO_SIGNAL
        if leftover or self.invalid:
            if leftover:
                log.warning("ignored %d trailing bytes (partial frame)", leftover)
            return EXIT_MALFORMED
        if self.tones == 0:
            log.warning("no signal detected in %d frames", self.frames)
            return EXIT_NO_SIGNAL
        return EXIT_OK


def cmd_analyze(args) -> int:
    src, close_in = _open_in(args.in_path)
    out, close_out = _open_out(args.out_path, binary=False)
    try:
        reporter = _Reporter(args, out)
        reader = _FrameReader(src, args.skip_bytes)
        for i, spectrum in enumerate(reader):
            reporter.emit(i, spectrum)
    finally:
        if close_in:
            src.close()
        if close_out:
            out.close()
    return reporter.status(reader.leftover)


def cmd_pipeline(args) -> int:
    out, close = _open_out(args.out_path, binary=False)
    try:
        reporter = _Reporter(args, out)
        for i, frame in enumerate(_synth_frames(args)):
            reporter.emit(i, pfa36(frame))
    finally:
        if close:
            out.close()
    return reporter.status()


def opcount_rows() -> list[tuple[str, int, int]]:
    report = opcount_report()
    rows = [(name, *kernel_cost(n)) for name, n in
            (("fft2", 2), ("fft4", 4), ("wfta3", 3), ("fft9", 9))]
    rows.append(("pfa36", report.real_adds, report.real_mults))
    rows.append(("dft36", report.naive_real_adds, report.naive_real_mults))
    return rows


def cmd_opcount(args) -> int:
    report = opcount_report()
    rows = opcount_rows()
    out, close = _open_out(args.out_path, binary=False)
    try:
        if args.format == "structured":
            doc = dict(vars(report))
            doc["kernels"] = {name: {"real_adds": a, "real_mults": m} for name, a, m in rows}
            out.write(json.dumps(doc) + "\n")
        else:
            out.write(f"{'transform':<10}{'real_adds':>10}{'real_mults':>12}\n")
            for name, adds, mults in rows:
                out.write(f"{name:<10}{adds:>10}{mults:>12}\n")
            out.write(f"reduction  adds {report.add_reduction_pct:.1f}%  "
                      f"mults {report.mult_reduction_pct:.1f}%\n")
            out.write("(direct DFT model: N^2 complex multiplies at 4 real mults + 2 real adds each)\n")
    finally:
        if close:
            out.close()
    return EXIT_OK


def cmd_oracle(args) -> int:
    """Report max |PFA - direct DFT| per frame; optionally save the direct spectra."""
    src, close_in = _open_in(args.in_path)
    spectra = None
    if args.out_path not in (None, "-"):
        spectra = open(args.out_path, "wb")
    worst = 0.0
    try:
        reader = _FrameReader(src, args.skip_bytes)
        for i, frame in enumerate(reader):
            exact = naive_dft(complex(s) for s in frame)
            fast = np.array([complex(s) for s in pfa36(frame)])
            err = float(np.max(np.abs(fast - exact)))
            worst = max(worst, err)
            if args.format == "structured":
                print(json.dumps({"frame": i, "max_abs_error": err}))
            else:
                print(f"frame={i} max_abs_error={err!r}")
            if spectra is not None:
                spectra.write(encode_frame([ComplexSample.from_complex(z) for z in exact]))
    finally:
        if close_in:
            src.close()
        if spectra is not None:
            spectra.close()
    if reader.leftover:
        log.warning("ignored %d trailing bytes (partial frame)", reader.leftover)
        return EXIT_MALFORMED
    return EXIT_OK


COMMANDS = {
    "synth": cmd_synth,
    "fft": cmd_fft,
    "analyze": cmd_analyze,
    "pipeline": cmd_pipeline,
    "opcount": cmd_opcount,
    "oracle": cmd_oracle,
}


def main(argv=None) -> int:
    logging.basicConfig(level=logging.INFO, format="%(name)s: %(levelname)s: %(message)s")
    if argv is None:
        argv = sys.argv[1:]
    pre = argparse.ArgumentParser(add_help=False)
    pre.add_argument("--config")
    known, _ = pre.parse_known_args(argv)
    config = None
    if known.config:
        try:
            config = read_config_file(known.config)
        except OSError as exc:
            log.error("cannot read config: %s", exc)
            return EXIT_IO
        except ConfigError as exc:
            log.error("%s", exc)
            return EXIT_USAGE
    parser = build_parser(config)
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_USAGE
    except BrokenPipeError:
        return EXIT_IO
    except OSError as exc:
        log.error("%s", exc)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
