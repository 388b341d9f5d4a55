# Import Libraries
import os
import time
import logging

# Constants
kLoggerName = "logsurf"
kLogFormat  = "%(levelname)s:%(message)s"

# Start of the Logger class
class Logger:
    """
    Use this class to log the debug info the workbench generates.

    Everything goes through the ``logsurf`` logger, so an application embedding the
    package keeps control of the root logger.
    """
    @staticmethod
    def getLogger() -> logging.Logger:
        """
        Returns the package logger.

        :return: The ``logsurf`` logger.
        """
        return logging.getLogger(kLoggerName)

    @staticmethod
    def setLogPath(dirPath: str = "/tmp/") -> str:
        """
        Enables file logging.

        :param dirPath: The directory the log file is written to, created when missing.
        :return: The path of the new log file.
        """
        # Gets the time as a string
        currTime = time.ctime().replace(" ", "_").replace(":", "-")[4:]
        os.makedirs(dirPath, exist_ok = True)
        filePath = os.path.join(dirPath, f"logsurf_{currTime}.log")

        # Attaches a file handler to the package logger
        handler = logging.FileHandler(filePath, encoding = "utf-8")
        handler.setFormatter(logging.Formatter(kLogFormat))

        logger = Logger.getLogger()
        logger.addHandler(handler)
        logger.setLevel(logging.DEBUG)

        return filePath

    @staticmethod
    def logDebug(debug: str, logStatus: bool = True):
        """
        Logs a debug statement.

        :param debug: The debug message to log
        :param logStatus: Is logging enabled
        """
        if (logStatus == True):
            Logger.getLogger().debug(debug)

    @staticmethod
    def logInfo(info: str, logStatus: bool = True):
        """
        Logs information.

        :param info: The info message to log
        :param logStatus: Is logging enabled
        """
        if (logStatus == True):
            Logger.getLogger().info(info)

    @staticmethod
    def logWarning(warning: str, logStatus: bool = True):
        """
        Logs a warning.

        :param warning: The warning message to log
        :param logStatus: Is logging enabled
        """
        if (logStatus == True):
            Logger.getLogger().warning(warning)

    @staticmethod
    def logError(error: str, logStatus: bool = True):
        """
        Logs an error.

        :param error: The error message to log
        :param logStatus: Is logging enabled
        """
        if (logStatus == True):
            Logger.getLogger().error(error)
