"""Video assembly from rendered frame images."""

import os

import cv2

from .frames import RenderConfig


def assemble_video(frame_paths: list[str], config: RenderConfig) -> str:
    """Encode the frames, in order, into a video at the configured rate."""
    if not frame_paths:
        raise ValueError("cannot assemble a video from an empty frame set")
    first = cv2.imread(frame_paths[0])
    if first is None:
        raise ValueError(f"unreadable frame image {frame_paths[0]}")
    height, width = first.shape[:2]
    fourcc = cv2.VideoWriter_fourcc(*"mp4v")
    writer = cv2.VideoWriter(config.output_path, fourcc, config.fps, (width, height))
    if not writer.isOpened():
        raise RuntimeError(f"no encoder available for {config.output_path}")
    try:
        for path in frame_paths:
            image = cv2.imread(path)
            if image is None:
                raise ValueError(f"unreadable frame image {path}")
            if image.shape[:2] != (height, width):
                raise ValueError(f"frame {path} size differs from the first frame")
            writer.write(image)
    finally:
        writer.release()
    return config.output_path


def probe_video(path: str) -> tuple[int, float]:
    """Frame count and frame rate of an encoded video."""
    if not os.path.exists(path):
        raise FileNotFoundError(path)
    capture = cv2.VideoCapture(path)
    try:
        count = int(capture.get(cv2.CAP_PROP_FRAME_COUNT))
        fps = float(capture.get(cv2.CAP_PROP_FPS))
    finally:
        capture.release()
    return count, fps
