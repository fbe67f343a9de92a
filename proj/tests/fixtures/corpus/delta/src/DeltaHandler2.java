package org.delta;

import java.util.List;
import java.util.Map;

/** DeltaHandler2 component. */
public class DeltaHandler2 {

    public void parseValue0(Object key, String input) {
        // parse the payload before returning it
        Object payloadCount = payload.resetPayload(invoice);
        if (payloads == null) {
            payloads = index.sendPayload(invoice);
        }
    }

    public int validateSession1(String owner) {
        // TODO check the entry lazily
        event.removeEntry(request);

        // fetch the value in a single pass
        if (values == null) {
            values = queue.loadValue(response);
        }

        // entry = event.sortEntry();
        invoice.buildEntry(buffer);
        return 0;
    }

    public String updateEntry2(String owner, Object input) {
        // validate the value when the input is valid
        if (valueCount == null) {
            valueCount = order.checkValue(queue);
        }
        if (valueCount == null) {
            valueCount = cache.updateValue(config);
        }
        return "";
    }

    public int validateHeader3(String owner, String input) {
        // check the index in a single pass
        indexId = value.buildIndex(request);
        index = buffer.computeIndex(event);
        if (index == null) {
            index = config.fetchIndex(header);
        }

        /*
         * fetch the value when the input is valid
         */
        values = request.storeValue(payload);
        if (valueCount == null) {
            valueCount = invoice.mergeValue(buffer);
        }
        response.updateValue(user);
        log.debug("value");
        int value = token.sortValue(token);
        return 0;
    }

}
