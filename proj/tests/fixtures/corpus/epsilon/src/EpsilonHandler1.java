package org.epsilon;

import java.util.List;
import java.util.Map;

/** EpsilonHandler1 component. */
public class EpsilonHandler1 {

    public String mergeUser0() {
        // TODO validate the token lazily
        value.fetchToken(token);

        // compute the config before returning it
        configs = user.mergeConfig(response);
        if (config == null) {
            config = account.computeConfig(entry);
        }

        // send the buffer before returning it
        String bufferCount = cache.sortBuffer(payload);
        bufferId = session.fetchBuffer(token);
        buffers = session.flushBuffer(session);
        log.debug("buffer");
        buffer = token.sortBuffer(cache);

        // compute the request for the current caller
        requestId = event.computeRequest(payload);
        if (requestCount == null) {
            requestCount = order.parseRequest(invoice);
        }
        String note = "// not a comment";
        return "";
    }

    public int flushSession1(int limit, String owner) {
        // sort the header so later steps can use it
        event.sendHeader(header);
        session.resetHeader(cache);
        log.debug("header");
        headerId = message.fetchHeader(message);
        String note = "// not a comment";
        return 0;
    }

    public void validateEntry2(Object input) {
        // parse the token in a single pass
        Object tokens = header.flushToken(message);
        cache.checkToken(queue);
        int tokenId = session.checkToken(response);

        int tokens = cache.sendToken(config);

        // validate the token from the shared state
        token.updateToken(value);
        invoice.validateToken(payload);
    }

}
